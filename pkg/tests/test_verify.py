import pytest

from wcqsym.verify import SUITES, SuiteResult, run_suite, run_suites, suite_names

ALL_SUITES = [
    "paper-examples",
    "quasi-shuffle",
    "hopf",
    "rota-baxter",
    "delta-independence",
    "abf-consistency",
    "stirling",
    "bounds",
]


def _broken(max_size):
    return [
        ("passes", lambda: None),
        ("fails", lambda: "boom"),
        ("raises", lambda: 1 // 0),
    ]


def test_suite_names():
    assert suite_names() == ALL_SUITES


def test_run_suite_invalid():
    with pytest.raises(ValueError):
        run_suite("nonexistent")
    with pytest.raises(ValueError):
        run_suite("bounds", max_size=0)


@pytest.mark.parametrize("name", ["bounds", "stirling", "paper-examples"])
def test_run_suite(name):
    result = run_suite(name, max_size=1)
    assert result.name == name
    assert result.results
    assert result.passed, result.first_failure


def test_run_suite_failures(monkeypatch):
    monkeypatch.setitem(SUITES, "broken", _broken)
    result = run_suite("broken", max_size=1)
    assert not result.passed
    assert [r.label for r in result.failures] == ["fails", "raises"]
    assert result.first_failure.detail == "boom"
    assert result.failures[1].detail.startswith("ZeroDivisionError")


def test_run_suite_multiprocessing():
    serial = run_suite("bounds", max_size=1)
    parallel = run_suite("bounds", max_size=1, multiprocessing=True)
    assert parallel.results == serial.results


def test_run_suites():
    results = run_suites(["bounds", "stirling"], max_size=1)
    assert all(isinstance(r, SuiteResult) for r in results)
    assert [r.name for r in results] == ["bounds", "stirling"]


@pytest.mark.slow
@pytest.mark.parametrize(
    ["name", "max_size"],
    [(name, k) for name in ALL_SUITES for k in (2, 3)]
    + [(name, 4) for name in ALL_SUITES if name not in ("abf-consistency", "paper-examples")],
)
def test_all_suites_pass(name, max_size):
    result = run_suite(name, max_size=max_size)
    assert result.passed, result.first_failure


def test_stirling_suite_covers_every_index():
    labels = [label for label, _ in SUITES["stirling"](3)]
    assert sum(label.startswith("basis") for label in labels) == 20
    assert sum(label.startswith("series") for label in labels) == 5


def test_hopf_suite_covers_directed_words():
    labels = [label for label, _ in SUITES["hopf"](3)]
    assert "antipode ((1, 2), (0, 1), (1, 1))" in labels
    assert "bialgebra ((0, 1),) ((1, 2), (0, 2))" in labels


def test_quasi_shuffle_product_cases_on_long_pairs():
    cases = dict(SUITES["quasi-shuffle"](3))
    for label in ("product (0,) (0, 1)", "product (0, 0) (1,)", "product (1,) (1, 1)"):
        assert cases[label]() is None
