import numpy as np
import pytest
from pydantic import ValidationError

from libs.trimer.errors import NotHermitianError
from libs.trimer.models import HamiltonianMatrix, SpinChainSpec
from libs.trimer.spin_ed import build_hamiltonian, eigendecompose, total_spin


def test_dimer_spectrum():
    h = build_hamiltonian(SpinChainSpec(n_sites=2, j_over_kb=-1.0))
    assert np.allclose(eigendecompose(h).energies, [-0.75, 0.25, 0.25, 0.25], atol=1e-12)


def test_trimer_spectrum(trimer_basis):
    assert np.allclose(trimer_basis.energies, [-20, -20, 0, 0, 10, 10, 10, 10], atol=1e-10)


@pytest.mark.parametrize(
    "spec",
    [
        SpinChainSpec(n_sites=3, j_over_kb=-20.0),
        SpinChainSpec(n_sites=4, j_over_kb=-3.5, boundary="periodic"),
        SpinChainSpec(n_sites=5, j_over_kb=7.0),
    ],
)
def test_hamiltonian_invariants(spec):
    h = build_hamiltonian(spec)
    assert h.dim == 2**spec.n_sites
    assert h.is_hermitian(1e-12)
    assert abs(np.trace(h.entries)) < 1e-12
    sz = total_spin(spec.n_sites, "z")
    assert np.max(np.abs(h.entries @ sz - sz @ h.entries)) < 1e-12


def test_periodic_adds_closing_bond():
    assert SpinChainSpec(n_sites=4, j_over_kb=-1.0, boundary="periodic").bonds()[-1] == (4, 1)
    assert len(SpinChainSpec(n_sites=4, j_over_kb=-1.0).bonds()) == 3


def test_reconstruction_and_orthonormality(trimer_h, trimer_basis):
    v, e = trimer_basis.vectors, trimer_basis.energies
    assert np.max(np.abs(trimer_h.entries - (v * e) @ v.conj().T)) < 1e-10
    assert np.max(np.abs(v.conj().T @ v - np.eye(8))) < 1e-10


def test_scaled_identity():
    basis = eigendecompose(HamiltonianMatrix(entries=2.5 * np.eye(4, dtype=complex), n_sites=2))
    assert np.allclose(basis.energies, 2.5)


def test_dimer_ground_vector_is_singlet():
    basis = eigendecompose(build_hamiltonian(SpinChainSpec(n_sites=2, j_over_kb=-1.0)))
    singlet = np.array([0, 1, -1, 0]) / np.sqrt(2)
    assert abs(abs(np.vdot(singlet, basis.vectors[:, 0])) - 1) < 1e-12


def test_non_hermitian_rejected():
    m = np.array([[0, 1], [0, 0]], dtype=complex)
    with pytest.raises(NotHermitianError):
        eigendecompose(HamiltonianMatrix(entries=m, n_sites=1))


@pytest.mark.parametrize("kwargs", [{"n_sites": 11}, {"n_sites": 1}, {"n_sites": 2, "boundary": "periodic"}])
def test_spec_bounds(kwargs):
    with pytest.raises(ValidationError):
        SpinChainSpec(j_over_kb=-1.0, **kwargs)
