import json

from pinched_veronese import (
    DEFAULT_FIELD,
    HomologyCache,
    HomologyProfile,
    Multidegree,
    PinchConfig,
    SCHEMA_VERSION,
    build_divisor_complex,
    graded_betti,
    reduced_homology,
)
from pinched_veronese.cli import main


def cfg(n, d, m):
    return PinchConfig(n, d, Multidegree(m))


# -- cache --------------------------------------------------------------------


def test_cache_round_trip(tmp_path):
    config = cfg(2, 5, (2, 3))
    cache = HomologyCache(tmp_path, config, DEFAULT_FIELD)
    h = Multidegree((4, 6))
    profile = reduced_homology(build_divisor_complex(h, config))
    assert cache.get(h) is None
    cache.put(h, profile)
    cache.save()
    assert cache.path.exists()
    reloaded = HomologyCache(tmp_path, config, DEFAULT_FIELD)
    assert reloaded.get(h) == profile


def test_cache_shared_across_permuted_pinch(tmp_path):
    config_a = cfg(2, 5, (2, 3))
    config_b = cfg(2, 5, (3, 2))
    cache_a = HomologyCache(tmp_path, config_a, DEFAULT_FIELD)
    cache_b = HomologyCache(tmp_path, config_b, DEFAULT_FIELD)
    assert cache_a.path == cache_b.path
    h = Multidegree((4, 6))
    profile = reduced_homology(build_divisor_complex(h, config_a))
    cache_a.put(h, profile)
    cache_a.save()
    reloaded_b = HomologyCache(tmp_path, config_b, DEFAULT_FIELD)
    # the permuted configuration reads the same entry through the swapped key
    assert reloaded_b.get(h.permuted((1, 0))) == profile


def test_cache_discards_corruption(tmp_path):
    config = cfg(2, 4, (2, 2))
    cache = HomologyCache(tmp_path, config, DEFAULT_FIELD)
    cache.put(Multidegree((4, 4)), HomologyProfile({0: 1}))
    cache.save()
    cache.path.write_text("{ not json")
    fresh = HomologyCache(tmp_path, config, DEFAULT_FIELD)
    assert fresh.get(Multidegree((4, 4))) is None
    # malformed single entry is skipped, valid ones survive
    payload = {
        "schema": SCHEMA_VERSION,
        "profiles": {"4,4": [[0, 1]], "8,0": "garbage"},
    }
    cache.path.write_text(json.dumps(payload))
    mixed = HomologyCache(tmp_path, config, DEFAULT_FIELD)
    assert mixed.get(Multidegree((4, 4))) == HomologyProfile({0: 1})
    assert mixed.get(Multidegree((8, 0))) is None


def test_cache_files_separate_by_field(tmp_path):
    from pinched_veronese import GF2

    config = cfg(2, 4, (2, 2))
    a = HomologyCache(tmp_path, config, DEFAULT_FIELD)
    b = HomologyCache(tmp_path, config, GF2)
    assert a.path != b.path
    h = Multidegree((4, 4))
    a.put(h, HomologyProfile({0: 1}))
    a.save()
    assert HomologyCache(tmp_path, config, GF2).get(h) is None


def test_cache_feeds_graded_betti(tmp_path):
    config = cfg(2, 4, (3, 1))
    cache = HomologyCache(tmp_path, config, DEFAULT_FIELD)
    cold = graded_betti(config, cache=cache)
    assert cache.path.exists()
    warm_cache = HomologyCache(tmp_path, config, DEFAULT_FIELD)
    assert len(warm_cache) > 0
    warm = graded_betti(config, cache=warm_cache)
    assert cold.entries == warm.entries


# -- CLI ----------------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cli_gens(capsys):
    code, out = run_cli(capsys, "gens", "-d", "3", "--pinch", "0")
    assert code == 0
    assert "(2, 1)" in out and "(0, 3)" in out


def test_cli_member_cross_check(capsys):
    code, out = run_cli(capsys, "member", "-d", "3", "--pinch", "3,0",
                        "--element", "5,1", "--cross-check")
    assert code == 0
    assert "not in" in out and "agrees" in out


def test_cli_hilbert_json(capsys):
    code, out = run_cli(capsys, "hilbert", "-d", "4", "--pinch", "0",
                        "--expand", "16", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == SCHEMA_VERSION
    # lattice counting: 3t+1 points in coarse degree t once the pinch is gone
    assert [payload["expansion"][4 * t] for t in range(5)] == [1, 4, 7, 10, 13]


def test_cli_hpoly(capsys):
    code, out = run_cli(capsys, "hpoly", "-d", "5", "--pinch", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["coarse_coefficients"] == [1, 0, -5, 5, 0, -1]


def test_cli_betti_text_and_csv(capsys):
    code, out = run_cli(capsys, "betti", "-d", "5", "--pinch", "1")
    assert code == 0
    assert "total:" in out and "cataloged entries" in out
    code, out = run_cli(capsys, "betti", "-d", "5", "--pinch", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "i,s,value"


def test_cli_classify(capsys):
    code, out = run_cli(capsys, "classify", "-d", "5", "--pinch", "1",
                        "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["is_gorenstein"] is True and payload["pdim"] == 3


def test_cli_verify_single(capsys):
    code, out = run_cli(capsys, "verify", "-d", "5", "--pinch", "1")
    assert code == 0
    assert "all checks pass" in out


def test_cli_verify_sweep_exit_code(capsys):
    code, out = run_cli(capsys, "verify", "--sweep", "n=2,d=3..3")
    assert code == 0
    assert "[PASS]" in out
    code, out = run_cli(capsys, "verify", "--sweep", "n=2,d=4..4")
    assert code == 1  # the interior catalog defect at d=4
    assert "[FAIL] d=4 m=(2, 2)" in out


def test_cli_canonical(capsys):
    code, out = run_cli(capsys, "canonical", "-n", "2", "-d", "5", "-k", "1",
                        "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["partner"] == 2 and payload["holds"] is True


def test_cli_dualcheck(capsys):
    code, out = run_cli(capsys, "dualcheck", "-d", "5", "--pinch", "2",
                        "--coarse", "3")
    assert code == 0
    assert "all pass" in out


def test_cli_dualcheck_serializes_faces(capsys):
    code, out = run_cli(capsys, "dualcheck", "-d", "3", "--pinch", "3,0",
                        "--element", "4,2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["complexes_checked"] == 1
    assert [] in payload["faces"]  # the empty face
    assert all(f == sorted(f) for f in payload["faces"])


def test_cli_usage_error(capsys):
    code = main(["gens", "-d", "9"])
    assert code == 2


def test_cli_resource_refusal(capsys):
    code = main(["betti", "-n", "3", "-d", "4", "--pinch", "2,1,1",
                 "--smax", "16"])
    assert code == 3


def test_cli_rationals_field(capsys):
    code, out = run_cli(capsys, "classify", "-d", "4", "--pinch", "2",
                        "--field", "q", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["field"] == "QQ" and payload["pdim"] == 3


def test_cli_cache_round_trip_bytes(tmp_path, capsys):
    argv = ["betti", "-d", "5", "--pinch", "2", "--format", "json",
            "--cache-dir", str(tmp_path)]
    code_cold, out_cold = run_cli(capsys, *argv)
    assert code_cold == 0
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    code_warm, out_warm = run_cli(capsys, *argv)
    assert code_warm == 0
    assert out_cold == out_warm


def test_cli_json_outputs_carry_schema(capsys):
    for argv in (
        ["gens", "-d", "4", "--pinch", "1", "--format", "json"],
        ["classify", "-d", "4", "--pinch", "0", "--format", "json"],
        ["verify", "-d", "4", "--pinch", "0", "--format", "json"],
        ["dualcheck", "-d", "4", "--pinch", "1", "--format", "json"],
    ):
        code, out = run_cli(capsys, *argv)
        assert code == 0
        assert json.loads(out)["schema"] == SCHEMA_VERSION
