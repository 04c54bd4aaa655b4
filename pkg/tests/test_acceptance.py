"""Acceptance battery: every criterion at its stated tolerance and budget.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion; the same battery backs the ``turanbounds verify`` subcommand.
"""

import pytest

from turanbounds.acceptance import CRITERIA


@pytest.mark.parametrize("cid,name,fn", CRITERIA,
                         ids=[f"criterion_{cid}" for cid, _, _ in CRITERIA])
def test_acceptance_criterion(cid, name, fn):
    res = fn(quick=False)
    print(res.line())
    assert res.passed, f"criterion {cid} ({name}) failed: {res.details}"
