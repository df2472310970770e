from syncro.crosscheck import SUITES, run


def _counts(summary):
    return {name: (r.checked, r.failed) for name, r in summary.suites.items()}


def test_binary_only_run_passes_everything():
    # with nmax = 2 every automaton is tiny; all suites must agree
    summary = run(200, 1, 2)
    assert summary.ok


def test_seeded_run_results():
    summary = run(300, 7, 6)
    for name in SUITES:
        if name == "lemma1-two-sets":
            continue
        assert summary.suites[name].ok, name
    assert summary.suites["oracle-sc"].checked == 300


def test_lemma1_counterexample_is_reported():
    # the 2-set criterion is not sufficient with three letters; the suite
    # states the equivalence as written and must flag the gap
    summary = run(500, 7, 6)
    res = summary.suites["lemma1-two-sets"]
    assert res.failed > 0
    index, A, _ = res.first_failure
    assert A.k >= 3
    assert summary.suites["lemma1-two-sets-binary"].ok


def test_parallel_matches_serial():
    serial = run(80, 3, 5, jobs=1)
    parallel = run(80, 3, 5, jobs=2)
    assert _counts(serial) == _counts(parallel)
    for name in SUITES:
        a, b = serial.suites[name].first_failure, parallel.suites[name].first_failure
        assert (a is None) == (b is None)
        if a is not None:
            assert a[0] == b[0] and a[1] == b[1]
