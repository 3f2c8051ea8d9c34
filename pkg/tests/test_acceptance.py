"""Full property suite, one test per advertised guarantee.

Each test prints its verdict line so a verbose run shows one pass/fail line
per criterion; the same checks back the CLI's all-acceptance command.
"""

from qonkit import acceptance


def _assert_pass(result):
    print(result.line())
    assert result.passed, result.line()


def test_braid_and_symmetry_pairs():
    _assert_pass(acceptance.check_braid(seed=0))


def test_symmetrizer_limits_and_expansion():
    _assert_pass(acceptance.check_symmetrizer())


def test_differential_square_vanishes():
    _assert_pass(acceptance.check_exterior(seed=0))


def test_ladder_relations():
    _assert_pass(acceptance.check_oscillator(seed=0))


def test_root_of_unity_nilpotency():
    _assert_pass(acceptance.check_nilpotency())


def test_grid_moments_and_resolution():
    _assert_pass(acceptance.check_jackson())


def test_coherent_state_identities():
    _assert_pass(acceptance.check_coherent(seed=0))


def test_mode_statistics():
    _assert_pass(acceptance.check_quon())


def test_graded_sector_exact():
    _assert_pass(acceptance.check_graded())


def test_classical_limits():
    _assert_pass(acceptance.check_classical())


def test_run_all_is_green():
    results = acceptance.run_all(seed=0)
    assert len(results) == 10
    assert all(r.passed for r in results)
    names = [r.name for r in results]
    assert len(set(names)) == 10
