import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import oracle_corner_colours, oracle_trisection, random_tricoloured_double
from trigenus.colouring import Colouring, find_colouring, run_pipeline
from trigenus.standard import boundary_5simplex, single_pentachoron
from trigenus.triangulation import NotClosedError, Triangulation
from trigenus.trisection import (
    TrisectionError,
    central_surface,
    spine_graph,
    trisection_report,
)


def test_s4_surface(s4_chain):
    _, moved, mc, _ = s4_chain
    s = central_surface(moved, mc)
    assert (s.squares, s.edges, s.vertices, s.chi, s.genus) == (12, 24, 8, -4, 3)
    assert s.components == 1 and s.orientable
    assert sum(s.vertex_degrees) == 4 * s.squares


def test_s4_spines(s4_chain):
    _, moved, mc, _ = s4_chain
    for k in range(3):
        g = spine_graph(moved, mc, k)
        assert (len(g.vertices), len(g.edges), g.connected, g.betti1) == (2, 2, True, 1)


def test_s4_report(s4_chain):
    *_, report = s4_chain
    assert report.genus_tuple() == "(3; 1, 1, 1)"
    assert report.chi == 2 and report.chi_check == 2
    data = json.loads(report.to_json())
    assert data["genus"] == 3 and data["handlebody_genera"] == [1, 1, 1]
    assert report.to_json() == trisection_report(*s4_chain[1:3]).to_json()


def test_pre_pipeline_surface_is_refused():
    tri = boundary_5simplex()
    c = find_colouring(tri)
    with pytest.raises(TrisectionError):
        central_surface(tri, c)
    with pytest.raises(TrisectionError):
        trisection_report(tri, c)


def test_bounded_input_is_refused():
    tri = single_pentachoron()
    c = Colouring(((0, 0), (0, 1), (0, 2), (0, 3), (0, 4)), (0, 0, 1, 1, 2), processed=True)
    with pytest.raises(NotClosedError, match="closed complex required"):
        central_surface(tri, c)


def test_colour_permutation_permutes_genera(s4):
    c = find_colouring(s4)
    base = trisection_report(*run_pipeline(s4, c))
    for sigma in ((1, 2, 0), (2, 1, 0), (0, 2, 1)):
        permuted = Colouring(c.representatives, tuple(sigma[x] for x in c.colours))
        report = trisection_report(*run_pipeline(s4, permuted))
        assert report.genus == base.genus
        expect = [None] * 3
        for k in range(3):
            expect[sigma[k]] = base.handlebody_genera[k]
        assert list(report.handlebody_genera) == expect


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), k=st.integers(1, 6))
def test_report_matches_brute_force(seed, k):
    rng = np.random.default_rng(seed)
    n, gluings, corners = random_tricoloured_double(rng, k)
    tri = Triangulation(n, gluings)
    moved, mc = run_pipeline(tri, Colouring.from_corners(tri, corners))
    report = trisection_report(moved, mc)
    s = report.surface
    assert s.edges == 2 * s.squares and sum(s.vertex_degrees) == 4 * s.squares
    assert report.chi_check == report.chi == 2
    mg = list(moved.gluings())
    cc = oracle_corner_colours(moved.size, mg, mc.representatives, mc.colours)
    genus, genera, chi_surface = oracle_trisection(moved.size, mg, cc)
    assert (genus, genera, chi_surface) == (report.genus, report.handlebody_genera, s.chi)
