import random

import numpy as np
import pytest

from libs.trimer.errors import ConfigError, DataError
from libs.trimer.pipeline import load_chi_series
from libs.trimer.storage import InMemoryStorage
from libs.trimer.units import CGS_EMU_PER_MOL, physical_chi


def _write(tmp_path, text, name="chi.csv"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def test_reduced_identity(tmp_path):
    s = load_chi_series(_write(tmp_path, "T_K,chi\n10,0.5\n20,0.45\n"), reduced=True)
    assert s.points == [(10.0, 0.5), (20.0, 0.45)]
    assert s.source.endswith("chi.csv")


def test_unparseable_row_names_line(tmp_path):
    with pytest.raises(DataError, match="line 2") as err:
        load_chi_series(_write(tmp_path, "T_K,chi\nabc,1\n"), reduced=True)
    assert err.value.line == 2


def test_comments_blank_lines_and_extra_columns(tmp_path):
    text = "# measured sweep\nT_K,chi,note\n10,0.3,a\n\n# mid comment\n12,0.31,b\n"
    s = load_chi_series(_write(tmp_path, text), reduced=True)
    assert s.points == [(10.0, 0.3), (12.0, 0.31)]
    bad = text + "oops,1,c\n"
    with pytest.raises(DataError) as err:
        load_chi_series(_write(tmp_path, bad, "bad.csv"), reduced=True)
    assert err.value.line == 7


def test_duplicates_are_averaged(tmp_path):
    s = load_chi_series(_write(tmp_path, "T_K,chi\n10,0.4\n5,0.3\n10,0.6\n"), reduced=True)
    assert s.temperatures().tolist() == [5.0, 10.0]
    assert s.chi()[1] == pytest.approx(0.5)


def test_permutation_invariant(tmp_path):
    rows = [f"{t},{0.25 + t / 1000}" for t in range(1, 60)]
    shuffled = rows[:]
    random.Random(3).shuffle(shuffled)
    a = load_chi_series(_write(tmp_path, "T_K,chi\n" + "\n".join(rows), "a.csv"), reduced=True)
    b = load_chi_series(_write(tmp_path, "T_K,chi\n" + "\n".join(shuffled), "b.csv"), reduced=True)
    assert a.points == b.points


@pytest.mark.parametrize(
    "text",
    ["T_K,chi\n0,0.3\n", "T_K,chi\n-4,0.3\n", "T_K,chi\n10,-0.1\n", "T,chi\n10,0.3\n", "# only a comment\n"],
)
def test_invalid_inputs(tmp_path, text):
    with pytest.raises(DataError):
        load_chi_series(_write(tmp_path, text), reduced=True)


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_chi_series(str(tmp_path / "nope.csv"))


def test_physical_units_round_trip(tmp_path):
    temps = np.array([2.0, 10.0, 50.0])
    target = np.array([0.26, 0.4, 0.7])
    raw = physical_chi(target, temps, g_factor=2.1) / CGS_EMU_PER_MOL
    text = "T_K,chi\n" + "\n".join(f"{t!r},{c!r}" for t, c in zip(temps, raw))
    s = load_chi_series(_write(tmp_path, text), chi_scale=CGS_EMU_PER_MOL, g_factor=2.1)
    assert np.allclose(s.chi(), target, rtol=1e-12)


def test_cgs_curie_constant_gives_free_spin(tmp_path):
    # C = 0.375 cm^3 K / mol for one S=1/2 with g=2 per formula unit
    s = load_chi_series(_write(tmp_path, "T_K,chi\n100,0.00375\n"), chi_scale=CGS_EMU_PER_MOL)
    assert s.chi()[0] == pytest.approx(0.25, rel=1e-3)


def test_in_memory_storage_and_source_comment():
    store = InMemoryStorage()
    store.put_bytes("upload.csv", b"# source: synthetic\nT_K,chi\n1,0.25\n")
    s = load_chi_series("upload.csv", reduced=True, storage=store)
    assert s.source == "synthetic"
    assert s.points == [(1.0, 0.25)]


def test_extra_field_on_every_row_is_not_shifted(tmp_path):
    with pytest.raises(DataError) as err:
        load_chi_series(_write(tmp_path, "T_K,chi\n10,0.30,0.99\n20,0.40,0.98\n"), reduced=True)
    assert err.value.line == 2


def test_ragged_row_reports_file_line(tmp_path):
    text = "# header comment\nT_K,chi\n10,0.3\n# mid\n11,0.3,extra\n"
    with pytest.raises(DataError, match="line 5") as err:
        load_chi_series(_write(tmp_path, text), reduced=True)
    assert err.value.line == 5


def test_short_row_reports_file_line(tmp_path):
    with pytest.raises(DataError) as err:
        load_chi_series(_write(tmp_path, "T_K,chi,note\n10,0.3,a\n\n12\n"), reduced=True)
    assert err.value.line == 4


@pytest.mark.parametrize("g", [0.0, -2.0])
def test_non_positive_g_rejected(tmp_path, g):
    with pytest.raises(ConfigError):
        load_chi_series(_write(tmp_path, "T_K,chi\n10,0.001\n"), chi_scale=CGS_EMU_PER_MOL, g_factor=g)
