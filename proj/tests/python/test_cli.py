"""End-to-end tests for the lclwb command line tool."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("LCLWB_CLI", "lclwb")

FULL_BINARY = {"states": ["q"], "initial": "q", "delta": {"q": {"0": "q", "1": "q"}}}
ZERO_ONLY = {"states": ["q"], "initial": "q", "delta": {"q": {"0": "q"}}}
COMPONENT = {"a0": FULL_BINARY, "a1": ZERO_ONLY, "depth": 2}


def run(args, stdin_doc=None, expect_code=0):
    result = subprocess.run(
        [CLI] + args,
        input=None if stdin_doc is None else json.dumps(stdin_doc),
        capture_output=True,
        text=True,
    )
    assert result.returncode == expect_code, result.stderr
    return result


def run_json(args, stdin_doc=None):
    return json.loads(run(args, stdin_doc).stdout)


def test_regtree_check():
    out = run_json(["regtree-check", "--member", "0110"], FULL_BINARY)
    assert out == {"pruned": True, "member": True}

    unpruned = {"states": ["q"], "initial": "q", "delta": {}}
    out = run_json(["regtree-check"], unpruned)
    assert out == {"pruned": False, "state": "q"}


def test_regtree_decide_f_exact_document():
    out = run_json(["regtree-decide-f"], FULL_BINARY)
    assert out == {"kind": "not_in_f", "stem": "", "cycle": "1"}

    assert run_json(["regtree-decide-f"], ZERO_ONLY) == {"kind": "in_f"}


def test_regtree_witness_prefix():
    out = run_json(["regtree-witness", "--depth", "6"], FULL_BINARY)
    assert out["prefix"] == "111111"


def test_lcl_solve_unsat_example():
    out = run_json(
        ["lcl-solve", "--problem", "sigma", "--palette", "5", "--depth", "4",
         "--mode", "lenient"],
        ZERO_ONLY,
    )
    assert out == {"result": "unsat"}

    sat = run_json(
        ["lcl-solve", "--problem", "sigma", "--palette", "6", "--depth", "4",
         "--mode", "lenient"],
        ZERO_ONLY,
    )
    assert sat["result"] == "sat"
    assert sat["coloring"][""] == 5


def test_sigma_color_and_extract_branch():
    colored = run_json(["sigma-color", "--depth", "3"], FULL_BINARY)
    assert colored["result"] == "colored"
    assert colored["coloring"][""] == 1

    assert run_json(["sigma-color", "--depth", "3"], ZERO_ONLY) == {"result": "in_f"}

    # The coloring pipes back into extract-branch via the automaton envelope.
    extracted = run_json(
        ["extract-branch"],
        {"automaton": FULL_BINARY, "depth": 3,
         "coloring": {"colors": colored["coloring"]}},
    )
    assert extracted == {"result": "ok", "bits": "111"}

    stuck = run_json(
        ["extract-branch"],
        {"automaton": ZERO_ONLY, "depth": 2, "coloring": {"colors": {"": 1}}},
    )
    assert stuck["result"] == "stuck_interior"

    empty = run_json(
        ["extract-branch"],
        {"automaton": ZERO_ONLY, "depth": 2, "coloring": {"colors": {}}},
    )
    assert empty["result"] == "root_not_positive"


def test_component_build_and_color():
    graph = run_json(["component-build"], COMPONENT)
    ids = {v["id"] for v in graph["vertices"]}
    assert "anchor" in ids
    assert "t0/" in ids and "t1/" in ids

    colored = run_json(["component-color"], COMPONENT)
    assert colored["result"] == "colored"
    assert colored["coloring"]["t0/"] >= 1

    uncolorable = {"a0": ZERO_ONLY, "a1": ZERO_ONLY, "depth": 2}
    assert run_json(["component-color"], uncolorable) == {"result": "not_colorable"}


def test_verify_truncation_coloring_via_envelope():
    colored = run_json(["sigma-color", "--depth", "4"], FULL_BINARY)
    verdict = run_json(
        ["lcl-verify", "--problem", "sigma", "--mode", "lenient"],
        {"automaton": FULL_BINARY, "depth": 4,
         "coloring": {"colors": colored["coloring"]}},
    )
    assert verdict == {"ok": True, "failures": []}


def test_solve_pi_on_component():
    out = run_json(
        ["lcl-solve", "--problem", "pi", "--palette", "2", "--mode", "lenient"],
        COMPONENT,
    )
    assert out["result"] == "sat"
    positives = [v for v, c in out["coloring"].items() if c >= 1]
    roots = [v for v in positives if v in ("t0/", "t1/")]
    assert len(roots) == 1  # the anchor rule: exactly one positive root


def test_solve_pi_star_matches_pi():
    spec = {"a0": ZERO_ONLY, "a1": ZERO_ONLY, "depth": 2}
    graph = run_json(["component-build"], spec)
    encoded = run_json(["gadget-encode"], graph)
    for palette in ["2", "3", "4"]:
        on_g = run_json(
            ["lcl-solve", "--problem", "pi", "--palette", palette, "--mode", "lenient"],
            spec,
        )
        on_gs = run_json(
            ["lcl-solve", "--problem", "pi-star", "--palette", palette,
             "--mode", "lenient"],
            {"graph": encoded},
        )
        assert on_g["result"] == on_gs["result"]
    assert run_json(["lcl-solve", "--problem", "pi", "--palette", "4",
                     "--mode", "lenient"], spec)["result"] == "sat"
    assert run_json(["lcl-solve", "--problem", "pi", "--palette", "3",
                     "--mode", "lenient"], spec)["result"] == "unsat"


def test_verify_component_coloring():
    graph = run_json(["component-build"], COMPONENT)
    colored = run_json(["component-color"], COMPONENT)
    verdict = run_json(
        ["lcl-verify", "--problem", "pi", "--mode", "lenient"],
        {"graph": graph, "coloring": {"colors": colored["coloring"]}},
    )
    assert verdict == {"ok": True, "failures": []}

    bad = run_json(
        ["lcl-verify", "--problem", "pi", "--mode", "lenient"],
        {"graph": graph, "coloring": {"colors": {}}},
    )
    assert bad["ok"] is False
    assert "anchor" in bad["failures"]


def test_gadget_round_trip_is_byte_identical(tmp_path):
    graph_file = tmp_path / "g.json"
    encoded_file = tmp_path / "gstar.json"

    run(["component-build", "--out", str(graph_file)], COMPONENT)
    run(["gadget-encode", "--in", str(graph_file), "--out", str(encoded_file)])
    decoded = run(["gadget-decode", "--in", str(encoded_file)])
    assert decoded.stdout == graph_file.read_text()


def test_proper_coloring_on_plain_cycle():
    cycle = {
        "mode": "plain",
        "vertices": [{"id": f"c{i}"} for i in range(5)],
        "edges": [{"a": f"c{i}", "b": f"c{(i + 1) % 5}"} for i in range(5)],
    }
    two = run_json(["lcl-solve", "--problem", "proper-k", "--palette", "2"],
                   {"graph": cycle})
    assert two == {"result": "unsat"}  # odd cycles are not 2-colorable
    three = run_json(["lcl-solve", "--problem", "proper-k", "--palette", "3"],
                     {"graph": cycle})
    assert three["result"] == "sat"


def test_gadget_decode_rejects_cycle():
    cycle = {
        "mode": "plain",
        "vertices": [{"id": f"c{i}"} for i in range(6)],
        "edges": [{"a": f"c{i}", "b": f"c{(i + 1) % 6}"} for i in range(6)],
    }
    out = run_json(["gadget-decode"], cycle)
    assert out["result"] == "not_in_image"


def test_pi_star_verify_through_cli():
    graph = run_json(["component-build"], COMPONENT)
    colored = run_json(["component-color"], COMPONENT)
    encoded = run_json(["gadget-encode"], graph)
    verdict = run_json(
        ["lcl-verify", "--problem", "pi-star", "--mode", "lenient"],
        {"graph": encoded, "coloring": {"colors": colored["coloring"]}},
    )
    assert verdict["ok"] is True


def test_export_dot():
    graph = run_json(["component-build", "--depth", "0"], COMPONENT)
    result = run(["export-dot"], {"graph": graph, "coloring": {"colors": {"t0/": 1}}})
    lines = result.stdout.splitlines()
    assert lines[0].startswith("graph")
    assert any("--" in line for line in lines)
    # Deterministic output.
    again = run(["export-dot"], {"graph": graph, "coloring": {"colors": {"t0/": 1}}})
    assert again.stdout == result.stdout


def test_exit_codes():
    run(["regtree-decide-f"], {"not": "an automaton"}, expect_code=2)
    result = subprocess.run([CLI, "no-such-command"], capture_output=True, text=True)
    assert result.returncode == 2
    # Wrongly typed fields are input errors, not crashes.
    run(["lcl-verify", "--problem", "sigma"],
        {"automaton": FULL_BINARY, "depth": "three", "coloring": {"colors": {}}},
        expect_code=2)
    # Mathematical answers exit 0 even when negative.
    run(["component-color"], {"a0": ZERO_ONLY, "a1": ZERO_ONLY, "depth": 1}, expect_code=0)


def test_stdout_json_reparses():
    for args, doc in [
        (["regtree-decide-f"], FULL_BINARY),
        (["component-build"], COMPONENT),
        (["lcl-solve", "--problem", "sigma", "--palette", "3", "--depth", "1",
          "--mode", "lenient"], FULL_BINARY),
    ]:
        out = run(args, doc).stdout
        json.loads(out)
