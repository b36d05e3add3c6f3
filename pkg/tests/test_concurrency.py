"""Shared immutable contexts are safe to use from several threads."""

import json
from concurrent.futures import ThreadPoolExecutor

from modrep.fieldcore import field_make
from modrep.permgroup import builtin
from modrep.report import analyze_algebra


def test_parallel_analyses_match_serial():
    gf4 = field_make(2, 2)
    a4 = builtin("A4")
    serial = analyze_algebra(a4, gf4, seed=2).report.to_json()

    def run(_):
        return analyze_algebra(a4, gf4, seed=2).report.to_json()

    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(run, range(4)))
    assert all(r == serial for r in results)
    # still a valid report
    obj = json.loads(serial)
    assert obj["cartan"] == [[2, 1, 1], [1, 2, 1], [1, 1, 2]]
