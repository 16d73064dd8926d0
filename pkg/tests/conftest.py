import os, sys
ROOT = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.abspath(os.path.join(ROOT, os.pardir))
sys.path.insert(0, os.path.abspath(os.path.join(ROOT)))

import pytest

from libs.trimer.models import SpinChainSpec, TrimerModel
from libs.trimer.spin_ed import build_hamiltonian, eigendecompose


@pytest.fixture
def trimer_spec():
    return SpinChainSpec(n_sites=3, j_over_kb=-20.0, boundary="open")


@pytest.fixture
def trimer_h(trimer_spec):
    return build_hamiltonian(trimer_spec)


@pytest.fixture
def trimer_basis(trimer_h):
    return eigendecompose(trimer_h)


@pytest.fixture
def betaine():
    return TrimerModel.compound("betaine")
