import json
import math

import pytest

import dee


def test_complete_graph_closed_form():
    for n in range(2, 9):
        g = dee.complete(n)
        spec = dee.distance_spectrum(g)
        assert spec[0] == pytest.approx(n - 1, abs=1e-9)
        assert all(x == pytest.approx(-1.0, abs=1e-9) for x in spec[1:])
        assert dee.dee(g) == pytest.approx(math.exp(n - 1) + (n - 1) / math.e, rel=1e-12)


def test_graph6_round_trip_and_distances():
    g = dee.Graph.from_graph6("C~")
    assert g.order == 4 and g.size == 6
    assert g.graph6() == "C~"
    c5 = dee.cycle(5)
    d = dee.distance_matrix(c5)
    assert d[0] == [0, 1, 2, 2, 1]
    assert c5.complement().is_connected()


def test_edge_list_parse_errors():
    with pytest.raises(dee.ParseError):
        dee.Graph.from_edge_list("3 1\n0 x\n")
    with pytest.raises(ValueError):
        dee.Graph.from_graph6("")


def test_disconnected_is_rejected():
    g = dee.Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(dee.PreconditionError):
        dee.distance_spectrum(g)


def test_bounds_for_petersen():
    report = dee.bounds(dee.petersen())
    by_id = {r["theorem_id"]: r for r in report["reports"]}
    assert by_id["T6_identity"]["equality"]
    assert by_id["L3_lambda1_lower"]["equality"]
    assert by_id["T3_lower"]["holds"] and not by_id["T3_lower"]["equality"]
    assert by_id["T5_upper"]["slack"] > 1e-6
    assert by_id["L4_class"]["detail"] == "Below2383" and by_id["L4_class"]["holds"]


def test_json_matches_cli_schema():
    doc = json.loads(dee.compute_json(dee.complete(4)))
    assert doc["graph_id"] == "C~"
    assert doc["dee"]["value"] == pytest.approx(math.exp(3) + 3 / math.e, rel=1e-12)
    assert doc["dee_complement"] is None
    bounds = json.loads(dee.bounds_json(dee.cycle(5)))
    t4 = [b for b in bounds["bounds"] if b["theorem_id"] == "T4_ng_lower"][0]
    assert t4["holds"] is False


def test_eigvalsh_symmetric_identities():
    a = [[2.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 2.0]]
    ev = dee.eigvalsh(a)
    assert sum(ev) == pytest.approx(6.0, abs=1e-12)
    assert ev == pytest.approx([2 + math.sqrt(2), 2.0, 2 - math.sqrt(2)], abs=1e-12)
    with pytest.raises(ValueError):
        dee.eigvalsh([[1.0, 2.0], [0.0, 1.0]])


def test_gnp_is_reproducible():
    assert dee.gnp(12, 0.4, 7) == dee.gnp(12, 0.4, 7)
    assert dee.gnp(12, 0.4, 7).edges() != dee.gnp(12, 0.4, 8).edges()


def test_verify_small():
    s = dee.verify(5, 1)
    assert s["ok"]
    assert s["graphs_checked"] == 1 + 4 + 38 + 728
    assert {f[3] < 0 for f in s["findings"]} <= {True}
    assert any(f[2].startswith("T4") for f in s["findings"])
