"""Acceptance suite: one test (and one printed pass/fail line) per criterion.

Each criterion delegates to the shared suite runners in
thompson_leavitt.verify with the full advertised batch sizes, so a green
run here means the same thing as `thompson-leavitt verify all`.
"""

import time

from thompson_leavitt import verify


def _report(label, rep, extra_ok=True):
    ok = rep.ok and extra_ok
    print("%s: %s (%d passed, %d failed, %.1fs)"
          % (label, "PASS" if ok else "FAIL", rep.passed, rep.failed,
             rep.seconds))
    for note in rep.notes:
        print("    " + note)
    assert ok, "\n".join([label] + rep.notes)


def test_criterion_1_correspondence_suite():
    t0 = time.time()
    rep = verify.correspondence_suite(seed=7, depth=6, pairs=200)
    within = time.time() - t0 < 120
    _report("criterion 1 (symbol/matrix correspondence)", rep, within)


def test_criterion_2_shift_suite():
    rep = verify.shift_suite(seed=7, depth=5, count=100)
    _report("criterion 2 (size-shift conjugation)", rep)


def test_criterion_3_generator_search():
    rep = verify.generators_suite(instances=((2, 4), (3, 5), (2, 6)),
                                  time_limit=60.0, span_bound=8)
    _report("criterion 3 (generator search)", rep)


def test_criterion_4_main_theorem_suite():
    rep = verify.main_theorem_suite(seed=7, depth=5, pairs=100)
    _report("criterion 4 (group isomorphisms)", rep)


def test_criterion_5_classification_grid():
    rep = verify.classification_suite()
    _report("criterion 5 (classification grid)", rep)


def test_criterion_6_algebra_suite():
    rep = verify.leavitt_suite(seed=7, pform_count=500, orders=20)
    _report("criterion 6 (algebra normal forms)", rep)


def test_criterion_7_group_suite():
    rep = verify.thompson_suite(seed=7, depth=6, count=300)
    _report("criterion 7 (group laws)", rep)
