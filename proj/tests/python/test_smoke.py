import json
import random

import pytest

import vinpos


def test_containment():
    assert vinpos.contains("231", "432516")
    assert not vinpos.contains("123", "432516")
    assert vinpos.occurrences("231", "432516") == [[1, 4, 5], [2, 4, 5], [3, 4, 5]]
    assert vinpos.count_occurrences("132", "53142") == 1
    scheme = vinpos.VincularScheme("rows=0,1,0:fill=0")
    assert vinpos.contains("1234", "342156", scheme)
    assert not vinpos.leq("1234", "342156", scheme)


def test_permutation_type():
    p = vinpos.Permutation("53142")
    assert len(p) == 5
    assert str(p) == "53142"
    assert p.values == [5, 3, 1, 4, 2]
    assert vinpos.Permutation([2, 1]) == vinpos.Permutation("21")
    assert str(vinpos.Permutation.standardize([30, 10, 20])) == "312"
    assert str(vinpos.direct_sum("21", "1")) == "213"
    assert vinpos.is_monotone("4321")
    with pytest.raises(ValueError):
        vinpos.Permutation("1a2")


def test_scheme():
    assert vinpos.VincularScheme("a=1,0,0").fingerprint == "quasi"
    assert vinpos.VincularScheme("quasi").type_vector(4) == [1, 0, 0]
    with pytest.raises(ValueError):
        vinpos.VincularScheme("bogus")


def test_interval_and_mobius():
    iv = vinpos.interval("132", "53142")
    assert iv.levels == [["132"], ["3142", "4132"], ["53142"]]
    assert len(iv.edges) == 4
    assert iv.rank == 2
    assert "4132" in [str(p) for p in iv.atoms()]
    data = json.loads(iv.to_json())
    assert data["scheme"] == "quasi"
    assert vinpos.mobius_bruteforce(vinpos.interval("12", "2413")) == 2
    assert vinpos.mobius_bruteforce(vinpos.interval("12", "2413"), "top_down") == 2
    result = vinpos.mobius("132", "531426")
    assert result["mu"] == -1
    assert result["case"] == "RANK3_EXCEPTIONAL"
    assert result["method"] == "closed_form"
    assert vinpos.classify_single_occurrence("213", "35142") == "RANK2_FIRST_ENTRY"
    with pytest.raises(vinpos.NotComparableError):
        vinpos.interval("12", "21")
    with pytest.raises(vinpos.NotApplicableError):
        vinpos.mobius("12", "2413", method="theorem")


def test_dot_output_parses():
    pydot = pytest.importorskip("pydot")
    rng = random.Random(7)
    checked = 0
    while checked < 50:
        n = rng.randint(2, 7)
        values = list(range(1, n + 1))
        rng.shuffle(values)
        tau = vinpos.Permutation(values)
        sigma = vinpos.Permutation.standardize(values[rng.randint(0, n - 1):])
        if not vinpos.leq(sigma, tau):
            continue
        iv = vinpos.interval(sigma, tau)
        graphs = pydot.graph_from_dot_data(iv.to_dot())
        assert graphs and len(graphs) == 1
        g = graphs[0]
        assert len(g.get_edges()) == len(iv.edges)
        nodes = [node for node in g.get_nodes() if node.get_name() not in ("node", "edge", "graph")]
        assert len(nodes) == len(iv)
        checked += 1
