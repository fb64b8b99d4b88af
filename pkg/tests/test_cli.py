import json

import pytest

from qcartan import __version__


def error_of(result):
    """The JSON error object is the last line on stderr"""
    return json.loads(result.stderr.strip().splitlines()[-1])


def test_help_without_arguments(invoke):
    result = invoke()
    assert result.exit_code == 0
    assert "enumerate" in result.stdout


def test_version(invoke):
    result = invoke("--version")
    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_unknown_command(invoke):
    result = invoke("frobnicate")
    assert result.exit_code == 3
    assert error_of(result)["error"] == "Usage Error"


def test_enumerate(invoke_json):
    data = invoke_json("enumerate", "--n", "4")
    assert data["count"] == 5
    assert data["items"] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]


def test_enumerate_exponent_notation(invoke_json):
    data = invoke_json("enumerate", "--n", "5", "--p", "2", "--kind", "class-regular", "--exponent-notation")
    assert data["items"] == ["5", "1^2 3", "1^5"]


def test_enumerate_multipartitions(invoke_json):
    data = invoke_json("enumerate", "--n", "1", "--kind", "multipartitions", "--r", "2")
    assert data["items"] == [[[1], []], [[], [1]]]


def test_enumerate_q(invoke_json):
    data = invoke_json("enumerate", "--n", "3", "--p", "2", "--kind", "q")
    assert data["items"] == [{"mu": [[]], "chi": [2, 1]}, {"mu": [[1]], "chi": [1]}]


def test_enumerate_needs_p(invoke):
    result = invoke("enumerate", "--n", "3", "--kind", "regular")
    assert result.exit_code == 3
    error = error_of(result)
    assert error["error"] == "Bad Request"
    assert error["command"] == "qcartan enumerate"


def test_enumerate_refuses_large_n(invoke):
    result = invoke("enumerate", "--n", "31")
    assert result.exit_code == 3
    assert "max_enumeration_n" in error_of(result)["message"]


def test_weights(invoke_json):
    data = invoke_json("weights", "--p", "2", "--n", "2")
    assert data["weights"] == [
        {"partition": [1, 1], "weight": {"p": 2, "label": "[2]_1", "factors": {"1": 1}}}
    ]


def test_weights_table(invoke):
    result = invoke("weights", "--p", "2", "--n", "4", "--which", "g", "--table")
    assert result.exit_code == 0
    assert "w_G" in result.stdout
    assert "[2]_1^2 [2]_2" in result.stdout


def test_weights_needs_p(invoke):
    assert invoke("weights", "--n", "2").exit_code == 3


def test_glaisher(invoke_json):
    data = invoke_json("glaisher", "--p", "2", "1^9 3 5^3")
    assert data["image"] == [10, 8, 5, 3, 1]
    assert data["steps"] == {"1": 4, "2": 2, "4": 1, "5": 1}
    assert data["weight"]["label"] == "[2]_1^4 [2]_2^2 [2]_4 [2]_5"


def test_bad_partition(invoke):
    result = invoke("glaisher", "--p", "2", "3,a")
    assert result.exit_code == 3


def test_delta(invoke_json):
    data = invoke_json("delta", "--p", "2", "--n", "4", "--by-block", "--expand")
    assert data["value"]["label"] == "[2]_1^2 [2]_2"
    assert data["expanded"] == [[0, 1], [2, 2], [4, 2], [6, 2], [8, 1]]
    assert [(b["d"], b["cores"]) for b in data["blocks"]] == [(0, 0), (1, 0), (2, 1)]


def test_delta_table(invoke):
    result = invoke("delta", "--p", "3", "--n", "6", "--table")
    assert result.exit_code == 0
    assert result.stdout.startswith("Δ_{3,6} = ")


def test_habacus(invoke_json):
    data = invoke_json("habacus", "9,7,3,2")
    assert data == {"partition": [9, 7, 3, 2], "core": [3], "quotient": [4], "unfolded": None}


def test_habacus_unfold(invoke_json):
    data = invoke_json("habacus", "4,3,2,1", "--unfold")
    assert data["unfolded"] == [7, 3]


def test_habacus_needs_strict(invoke):
    result = invoke("habacus", "2,2")
    assert result.exit_code == 3
    assert error_of(result)["error"] == "Validation Error"


def test_series_check(invoke_json):
    data = invoke_json("series-check", "--p", "2", "--order", "8")
    assert data["all_passed"]
    assert all(identity["passed"] for identity in data["identities"])


def test_decomp(invoke_json, settings):
    data = invoke_json("decomp", "--p", "2", "--n", "2")
    assert data["cols"] == [[2]]
    assert data["entries"] == [
        {"row": [2], "col": [2], "value": {"label": "1", "terms": [[0, 1]]}},
        {"row": [1, 1], "col": [2], "value": {"label": "q", "terms": [[1, 1]]}},
    ]
    assert (settings.cache_dir / "decomp" / "p2" / "n2.json").exists()


def test_decomp_without_cache(invoke, settings):
    result = invoke("--no-cache", "decomp", "--p", "2", "--n", "3")
    assert result.exit_code == 0
    assert not (settings.cache_dir / "decomp" / "p2" / "n3.json").exists()


def test_decomp_cache_dir_option(invoke, tmp_path):
    other = tmp_path / "elsewhere"
    result = invoke("--cache-dir", str(other), "decomp", "--p", "3", "--n", "3")
    assert result.exit_code == 0
    assert (other / "decomp" / "p3" / "n3.json").exists()


def test_cartan_determinant(invoke_json):
    data = invoke_json("cartan", "--p", "2", "--n", "2", "--det")
    assert data["entries"] is None
    assert data["determinant"] == {"label": "1 + q^2", "terms": [[0, 1], [2, 1]]}


def test_cartan_block(invoke_json):
    data = invoke_json("cartan", "--p", "2", "--n", "5", "--block", "2,1")
    assert data["block"] == "2,1"
    assert data["labels"] == [[4, 1]]
    assert data["entries"] == [[{"label": "1 + q^2", "terms": [[0, 1], [2, 1]]}]]


def test_cartan_degrees(invoke_json):
    data = invoke_json("cartan", "--p", "2", "--n", "2", "--degrees")
    assert data["degrees"] == [[2]]
    assert invoke_json("cartan", "--p", "2", "--n", "2")["degrees"] is None
    block = invoke_json("cartan", "--p", "2", "--n", "5", "--block", "2,1", "--det", "--degrees")
    assert block["entries"] is None
    assert block["degrees"] == [[2]]


def test_cartan_missing_block(invoke):
    result = invoke("cartan", "--p", "2", "--n", "4", "--block", "1")
    assert result.exit_code == 3
    assert error_of(result)["error"] == "Not Found"


def test_cartan_refuses_large_n(invoke, settings):
    result = invoke("cartan", "--p", "2", "--n", str(settings.max_cartan_n + 1))
    assert result.exit_code == 3
    assert error_of(result)["error"] == "Bad Request"


def test_snf(invoke_json):
    data = invoke_json("snf", "--p", "2", "--n", "3")
    assert data["divisors"] == ["1", "1 + q^2"]
    assert not data["rank_deficient"]


@pytest.mark.parametrize("extra", [[], ["--blockwise"]])
def test_conjecture_small(invoke_json, extra):
    data = invoke_json("conjecture", "--p", "2", "--n", "2", *extra)
    assert data["all_equal"]
    assert all(c["equal"] for c in data["comparisons"])


def test_conjecture_needs_prime(invoke):
    result = invoke("conjecture", "--p", "4", "--n", "2")
    assert result.exit_code == 3
    assert "prime" in error_of(result)["message"]


def test_verify(invoke_json):
    data = invoke_json("verify", "cardinalities", "--n", "5")
    assert data["statement"] == "cardinalities"
    assert data["verdict"] == "pass"
    assert data["timing"]["runtime_seconds"] >= 0


def test_verify_without_timing(invoke_json):
    data = invoke_json("verify", "multiplicity-sums", "--n", "6", "--p", "3", "--no-timing")
    assert data["timing"] is None
    assert data["parameters"] == {"p": [3], "n_max": 6}


def test_verify_reported_statement(invoke_json):
    data = invoke_json("verify", "elementary-divisors", "--p", "2", "--n", "3")
    assert data["verdict"] == "reported"
    assert data["witness"] is None


def test_verify_list(invoke):
    result = invoke("verify", "--list")
    assert result.exit_code == 0
    assert "habacus-blocks" in result.stdout


def test_verify_unknown_statement(invoke):
    result = invoke("verify", "no-such-statement")
    assert result.exit_code == 3
    assert error_of(result)["error"] == "Not Found"


def test_verify_short_id(invoke):
    result = invoke("verify", "thm-4.1", "--p", "2", "--n", "8")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["statement"] == "determinant-products"


def test_verify_theorem_option(invoke_json):
    data = invoke_json("verify", "--theorem", "7.1", "--dmax", "2", "--no-timing")
    assert data["statement"] == "habacus-blocks"
    assert data["parameters"] == {"p": [2], "d_max": 2}
    assert data["verdict"] == "pass"


def test_verify_theorem_with_statement(invoke):
    result = invoke("verify", "cardinalities", "--theorem", "4.1")
    assert result.exit_code == 3
    assert error_of(result)["error"] == "Bad Request"


def test_verify_list_shows_short_ids(invoke):
    result = invoke("verify", "--list")
    assert "conj-8.2" in result.stdout
    assert "lemma-3.1" in result.stdout


def test_verify_wrong_bound(invoke):
    result = invoke("verify", "cardinalities", "--d", "3")
    assert result.exit_code == 3
    assert "--d" in error_of(result)["message"]


def test_verify_refuses_large_bound(invoke):
    result = invoke("verify", "block-determinants", "--n", "40")
    assert result.exit_code == 3
    assert "max_cartan_n" in error_of(result)["message"]


def test_verify_needs_a_statement(invoke):
    result = invoke("verify")
    assert result.exit_code == 3
    assert error_of(result)["error"] == "Usage Error"


def test_verify_all_takes_no_bounds(invoke):
    assert invoke("verify", "--all", "--n", "3").exit_code == 3
