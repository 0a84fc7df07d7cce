import json

import pytest

from octahedral.cli import main
from octahedral.utils import settings
from tools.branching import get_branching
from tools.character_table import get_character_table
from tools.decomposition import get_decomposition
from tools.dirac_relations import get_dirac_relations
from tools.group_info import get_group_info
from tools.idempotents import get_idempotents
from tools.orchestrator import analyze_irreducible
from tools.suite import get_suite


def test_group_info():
    info = get_group_info("H")
    assert info["order"] == 16
    assert info["generators"] == ["j", "d"]
    assert all(r["pass"] for r in info["relations"])
    with pytest.raises(ValueError):
        get_group_info("")


def test_character_table_tool():
    result = get_character_table("K")
    assert [r["label"] for r in result["irreps"]] == ["1+", "1-", "2_0"]
    assert [r["indicator"] for r in result["irreps"]] == [1, 1, 1]
    assert result["real_algebra"] == "2R + M2(R)"


def test_decomposition_tool():
    result = get_decomposition("2+*3+")
    assert result["expression"] == "2+ * 3+"
    assert result["terms"] == {"2-": 1, "4_0": 1}
    assert result["paper"] == "2⁻ + 4⁰"
    with pytest.raises(ValueError):
        get_decomposition("")


def test_branching_tool():
    result = get_branching("K")
    assert result["columns"] == ["1+", "1-", "2_0"]
    assert result["rows"]["4_0"]["multiplicities"] == [1, 1, 1]
    with pytest.raises(ValueError):
        get_branching("G")


def test_idempotents_tool():
    result = get_idempotents(-1)
    assert result["leptons"]["group"] == "K"
    assert all(c["pass"] for c in result["leptons"]["checks"])
    assert result["complex_structure"]["sign"] == -1
    with pytest.raises(ValueError):
        get_idempotents(0)


def test_dirac_tool():
    assert len(get_dirac_relations()["deviations"]) == 4


def test_suite_tool():
    assert get_suite("dirac")["exit_code"] == 0
    assert get_suite("nope")["exit_code"] == 2


def test_analyze_irreducible():
    result = analyze_irreducible("3+")
    assert result["indicator"] == 1
    assert result["restrictions"] == {"H": "1c + 2a", "K": "1+ + 2_0"}
    assert result["square"]["L2"] == "3-"
    assert result["matrices"]["verified_variant"] == "jd inverted"
    assert "error" in analyze_irreducible("7")


def test_cli_decompose(capsys):
    assert main(["decompose", "L2(3+)", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["terms"] == {"3-": 1}


def test_cli_parse_error(capsys):
    assert main(["decompose", "2+ * )"]) == 2
    assert "parse error" in capsys.readouterr().err


def test_cli_unknown_suite(capsys):
    assert main(["suite", "nope"]) == 2
    assert "unknown suite" in capsys.readouterr().err


def test_cli_usage_error():
    assert main(["chartab", "--group", "Q9"]) == 2
    assert main([]) == 2


def test_cli_bad_prime(capsys, monkeypatch):
    monkeypatch.setattr(settings, "prime", settings.prime)
    assert main(["--prime", "7", "chartab", "--group", "Sym3"]) == 2
    assert "prime-unsuitable" in capsys.readouterr().err


def test_cli_suite_to_file(tmp_path):
    out = tmp_path / "dirac.json"
    assert main(["suite", "dirac", "--format", "json", "--out", str(out)]) == 0
    assert json.loads(out.read_text(encoding="utf-8"))["passed"] is True


def test_cli_idempotents(capsys):
    assert main(["idempotents"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["complex_structures"]) == 2
