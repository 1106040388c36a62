import json

import pytest

from servicecap.cli import main


def write_config(tmp_path, payload, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def mds_config(tmp_path):
    return write_config(tmp_path, {"mu": "1", "code": {"kind": "mds", "n": 4, "k": 2}})


@pytest.fixture
def rep_config(tmp_path):
    return write_config(tmp_path, {"mu": "1", "code": {"kind": "replication",
                                                       "n": 4, "copies": [2, 2]}})


@pytest.fixture
def simplex3_config(tmp_path):
    return write_config(tmp_path, {"mu": "1", "code": {"kind": "simplex", "k": 3}})


class TestRegion:
    def test_mds_csv(self, mds_config, capsys):
        assert main(["region", "--config", mds_config]) == 0
        assert capsys.readouterr().out == "0,5/2\n1,2\n2,1\n5/2,0\n"

    def test_replication_csv(self, rep_config, capsys):
        assert main(["region", "--config", rep_config]) == 0
        assert capsys.readouterr().out == "0,2\n2,2\n2,0\n"

    def test_support_table_for_three_files(self, simplex3_config, capsys):
        assert main(["region", "--config", simplex3_config]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "direction,max_weighted_sum"
        assert "all,4" in out
        assert "f1,4" in out

    def test_csv_bytes_deterministic(self, mds_config, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(["region", "--config", mds_config, "--out", str(a)]) == 0
        assert main(["region", "--config", mds_config, "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_svg_embeds_exact_vertices(self, mds_config, tmp_path):
        out = tmp_path / "region.svg"
        assert main(["region", "--config", mds_config, "--format", "svg",
                     "--out", str(out)]) == 0
        svg = out.read_text()
        assert 'data-vertices="0,5/2 1,2 2,1 5/2,0"' in svg
        assert "polyline" in svg and "mds closed form" in svg

    def test_plot_alias(self, rep_config, tmp_path):
        out = tmp_path / "plot.svg"
        assert main(["plot", "--config", rep_config, "--out", str(out)]) == 0
        assert 'data-vertices="0,2 2,2 2,0"' in out.read_text()

    def test_generator_config(self, tmp_path, capsys):
        path = write_config(tmp_path, {
            "mu": "1",
            "code": {"kind": "generator", "q": 3,
                     "rows": [[1, 0, 1, 1], [0, 1, 1, 2]]}})
        assert main(["region", "--config", path]) == 0
        assert capsys.readouterr().out == "0,5/2\n1,2\n2,1\n5/2,0\n"


class TestMember:
    def test_simplex_boundary_demand(self, simplex3_config, capsys):
        assert main(["member", "--config", simplex3_config,
                     "--demand", "4/3,4/3,4/3"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "file,recovering_set,share"

    def test_zero_demand_empty_allocation(self, simplex3_config, capsys):
        assert main(["member", "--config", simplex3_config, "--demand", "0,0,0"]) == 0
        assert capsys.readouterr().out == "file,recovering_set,share\n"

    def test_outside(self, simplex3_config, capsys):
        assert main(["member", "--config", simplex3_config, "--demand", "5,0,0"]) == 1
        assert "outside region" in capsys.readouterr().err

    def test_malformed_demand(self, mds_config):
        assert main(["member", "--config", mds_config, "--demand", "1"]) == 3
        assert main(["member", "--config", mds_config, "--demand", "x,y"]) == 3


class TestWaterfill:
    def test_boundary_demand(self, mds_config, capsys):
        assert main(["waterfill", "--config", mds_config, "--demand", "3/2,3/2"]) == 0
        out = capsys.readouterr().out
        assert "node,load" in out
        for node in range(1, 5):
            assert "%d,1" % node in out.splitlines()

    def test_light_demand_systematic_only(self, mds_config, capsys):
        assert main(["waterfill", "--config", mds_config, "--demand", "1/2,3/4"]) == 0
        out = capsys.readouterr().out
        assert "1,1,1/2" in out and "2,2,3/4" in out

    def test_infeasible_reports_residual(self, mds_config, capsys):
        assert main(["waterfill", "--config", mds_config, "--demand", "2,2"]) == 1
        assert "unserved residual 1" in capsys.readouterr().err

    def test_non_mds_config_is_usage_error(self, rep_config, capsys):
        assert main(["waterfill", "--config", rep_config, "--demand", "1,1"]) == 3


class TestCompare:
    def test_mds_agrees(self, capsys):
        assert main(["compare", "mds", "4", "2"]) == 0
        out = capsys.readouterr().out
        assert "max_abs_gap: 0" in out

    def test_hybrid_discrepancy(self, capsys):
        assert main(["compare", "hybrid", "2", "1", "1"]) == 2
        out = capsys.readouterr().out
        assert "max_abs_gap: 1/2" in out
        assert "3/2,7/4,3/2,1/4" in out

    def test_simplex_agrees(self, capsys):
        assert main(["compare", "simplex", "3"]) == 0
        out = capsys.readouterr().out
        assert "all-ones support: closed form 4, lp 4, gap 0" in out

    def test_replication_agrees(self, capsys):
        assert main(["compare", "replication", "4", "2", "2"]) == 0

    def test_config_form(self, mds_config, capsys):
        assert main(["compare", "--config", mds_config]) == 0

    def test_missing_target(self):
        assert main(["compare"]) == 3


class TestConfigValidation:
    def test_unknown_top_level_field(self, tmp_path, capsys):
        path = write_config(tmp_path, {"mu": "1", "advice": 1,
                                       "code": {"kind": "simplex", "k": 2}})
        assert main(["region", "--config", path]) == 3
        assert "advice" in capsys.readouterr().err

    def test_unknown_code_field(self, tmp_path, capsys):
        path = write_config(tmp_path, {"mu": "1",
                                       "code": {"kind": "mds", "n": 4, "k": 2, "x": 1}})
        assert main(["region", "--config", path]) == 3
        assert "code.x" in capsys.readouterr().err

    def test_missing_code_field(self, tmp_path, capsys):
        path = write_config(tmp_path, {"mu": "1", "code": {"kind": "mds", "n": 4}})
        assert main(["region", "--config", path]) == 3
        assert "code.k" in capsys.readouterr().err

    def test_bad_kind(self, tmp_path, capsys):
        path = write_config(tmp_path, {"mu": "1", "code": {"kind": "raid6"}})
        assert main(["region", "--config", path]) == 3
        assert "code.kind" in capsys.readouterr().err

    def test_bad_mu(self, tmp_path, capsys):
        path = write_config(tmp_path, {"mu": "0", "code": {"kind": "simplex", "k": 2}})
        assert main(["region", "--config", path]) == 3
        assert "mu" in capsys.readouterr().err

    def test_unreadable_file(self, tmp_path):
        assert main(["region", "--config", str(tmp_path / "missing.json")]) == 3

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{nope")
        assert main(["region", "--config", str(path)]) == 3

    def test_unrecoverable_code(self, tmp_path, capsys):
        path = write_config(tmp_path, {"mu": "1",
                                       "code": {"kind": "hybrid", "a": 1, "b": 0, "c": 0}})
        assert main(["region", "--config", path]) == 3
        assert "unrecoverable" in capsys.readouterr().err

    def test_usage_error_not_exit_2(self):
        # argparse failures must not collide with the discrepancy code
        assert main(["region"]) == 3
        assert main(["frobnicate"]) == 3
