"""One line per acceptance criterion, at its stated tolerance (exact)."""

import pytest

from pinstructures import acceptance
from pinstructures.cli import main

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("number", [n for n, _, _ in acceptance.CRITERIA])
def test_criterion(number):
    result = acceptance.run_criterion(number)
    print(result.line())
    ACCEPTANCE_LINES.append(result.line())
    assert result.passed, result.detail
    # each suite is meant to run at desk scale
    assert result.seconds < 60


def test_verify_exit_code(capsys, monkeypatch):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == len(acceptance.CRITERIA)

    def broken():
        raise acceptance._Failed("forced failure")

    first = acceptance.CRITERIA[0]
    monkeypatch.setattr(acceptance, "CRITERIA", [first, (2, "always fails", broken)])
    assert main(["verify"]) == 3
    assert "FAIL" in capsys.readouterr().out
