"""CLI contract: golden reproductions, exit codes, determinism."""

import json
import pathlib

import pytest

from wreathvote.cli import main

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"
GOLDEN_CASES = sorted(p.stem for p in GOLDEN_DIR.glob("*.json"))


def run_cli(capsys, args):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


@pytest.mark.parametrize("name", GOLDEN_CASES)
def test_golden_reproduction(capsys, name):
    """Each golden file replays one documented worked example."""
    case = json.loads((GOLDEN_DIR / f"{name}.json").read_text())
    code, out = run_cli(capsys, case["args"])
    assert code == 0
    assert json.loads(out) == case["expected"]


@pytest.mark.parametrize("name", GOLDEN_CASES)
def test_byte_identical_reruns(capsys, name):
    case = json.loads((GOLDEN_DIR / f"{name}.json").read_text())
    _, first = run_cli(capsys, case["args"])
    _, second = run_cli(capsys, case["args"])
    assert first == second


class TestExitCodes:
    def test_success(self, capsys):
        assert main(["param-count", "--m", "2", "--n", "2"]) == 0
        capsys.readouterr()

    def test_size_guard_is_2(self, capsys):
        assert main(["committees", "--m", "100", "--n", "100"]) == 2
        assert "size guard" in capsys.readouterr().err

    def test_bad_vector_length_is_1(self, capsys):
        assert main(["decompose", "--m", "2", "--n", "2", "--weights", "1,2,3"]) == 1
        capsys.readouterr()

    def test_malformed_rational_is_1(self, capsys):
        assert main(["schur", "--m", "2", "--n", "2", "--weights", "1,zebra,0"]) == 1
        capsys.readouterr()

    def test_missing_subcommand_is_1(self, capsys):
        assert main([]) == 1
        capsys.readouterr()

    def test_unknown_flag_is_1(self, capsys):
        assert main(["param-count", "--m", "2", "--n", "2", "--bogus"]) == 1
        capsys.readouterr()

    def test_infeasible_paradox_is_3(self, capsys):
        instance = json.dumps(
            {
                "weights": [["3/2", "1/2", "-1/2", "-3/2"]],
                "targets": [["1", "-1", "-1", "1"]],  # sign component target
                "orbit": 0,
            }
        )
        assert main(["paradox", "--m", "2", "--n", "2", "--instance", instance]) == 3
        assert "infeasible" in capsys.readouterr().err

    def test_help_is_0(self, capsys):
        assert main(["--help"]) == 0
        capsys.readouterr()


class TestFormats:
    def test_table_output(self, capsys):
        code, out = run_cli(capsys, ["committees", "--m", "2", "--n", "2", "--format", "table"])
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 4
        assert "(1_1,2_1)" in lines[0]
        assert "(1_2,2_2)" in lines[3]

    def test_orbits_table_shows_aliases(self, capsys):
        code, out = run_cli(capsys, ["orbits", "--m", "2", "--n", "2", "--format", "table"])
        assert code == 0
        assert "[fig1]" in out and "[fig3]" in out

    def test_json_round_trip(self, capsys):
        # every rational string in the output re-parses to the same value
        from wreathvote.ratlinalg import as_rational

        code, out = run_cli(capsys, ["decompose", "--m", "2", "--n", "2", "--weights", "9,5,6,10"])
        payload = json.loads(out)
        reparsed = [[as_rational(x) for x in comp] for comp in payload["components"]]
        total = [sum(col) for col in zip(*reparsed)]
        assert total == [as_rational(x) for x in payload["input"]]

    def test_paradox_profile_round_trip(self, capsys):
        # the emitted profile re-parses and still solves the instance
        from wreathvote import combinatorics as cb
        from wreathvote import jsonio, paradox

        instance = {
            "weights": [["3/2", "1/2", "-1/2", "-3/2"]],
            "targets": [["1", "-1", "1", "-1"]],
            "orbit": "fig2",
        }
        code, out = run_cli(
            capsys, ["paradox", "--m", "2", "--n", "2", "--instance", json.dumps(instance)]
        )
        assert code == 0
        payload = json.loads(out)
        profile = jsonio.ranking_profile_from_json(2, 2, payload["profile"])
        orbit = cb.enumerate_orbits(2, 2)[payload["orbit"]["id"]]
        inst = paradox.paradox_instance(
            2, 2, instance["weights"], instance["targets"], orbit
        )
        sol = paradox.ParadoxSolution(
            profile=profile, solution_space_dim=payload["solution_space_dim"]
        )
        assert paradox.verify_solution(inst, sol)


class TestFileInputs:
    def test_weights_file_and_profile_file(self, tmp_path, capsys):
        weights = tmp_path / "ow.json"
        weights.write_text(
            json.dumps(
                {
                    "default": ["1", "1/3", "-1/3", "-1"],
                    "orbits": {
                        "fig2": ["1", "-1/3", "-1", "1/3"],
                        "fig3": ["1", "-1", "-1/3", "1/3"],
                    },
                }
            )
        )
        profile = tmp_path / "profile.json"
        records = []
        import itertools

        for r in itertools.permutations(range(4)):
            records.append({"ranking": list(r), "count": str([3, 1, -1, -3][r.index(0)])})
        profile.write_text(json.dumps(records))
        code, out = run_cli(
            capsys,
            [
                "tally-rankings",
                "--m", "2", "--n", "2",
                "--weights-file", str(weights),
                "--profile", str(profile),
            ],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["scores"] == ["64/3", "0", "0", "-64/3"]
        assert payload["winners"] == [0]

    def test_paradox_split_flags(self, tmp_path, capsys):
        wfile = tmp_path / "w.json"
        wfile.write_text(json.dumps([["3/2", "1/2", "-1/2", "-3/2"]]))
        tfile = tmp_path / "t.json"
        tfile.write_text(json.dumps([["1", "-1", "1", "-1"]]))
        code, out = run_cli(
            capsys,
            [
                "paradox",
                "--m", "2", "--n", "2",
                "--weights-file", str(wfile),
                "--targets", str(tfile),
                "--orbit", "0",
            ],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["solution_space_dim"] >= 1

    def test_effective_orbit_weights_file(self, tmp_path, capsys):
        weights = tmp_path / "ow.json"
        weights.write_text(
            json.dumps(
                {
                    "default": ["1", "-1/3", "-1/3", "-1/3"],
                    "orbits": {"0": ["1", "1/2", "-1/2", "-1"]},
                }
            )
        )
        code, out = run_cli(
            capsys,
            ["effective", "--m", "2", "--n", "2", "--weights-file", str(weights)],
        )
        assert code == 0
        payload = json.loads(out)
        dims = [o["image_component_dims"] for o in payload["per_orbit"]]
        assert dims == [[0, 2, 0], [0, 2, 1], [0, 2, 1]]
