import yfib


def test_shapes():
    shapes = yfib.shapes_of_size(3)
    assert [str(s) for s in shapes] == ["21", "12", "111"]
    assert yfib.Snakeshape("2212").size() == 7
    assert yfib.chain_count(yfib.Snakeshape("2212")) == 24
    assert yfib.hook_count(yfib.Snakeshape("2212")) == 24


def test_insertion():
    p, q = yfib.insert_pq("2715643")
    assert str(p) == "3:7 4:6 5 1:2"
    assert str(q) == "2:7 5:6 4 1:3"
    assert str(p.shape()) == "2212"
    assert yfib.min_cano(p) == "2156473"
    assert yfib.is_standard(p)


def test_chains_and_growth():
    p_chain, q_chain = yfib.growth_chains("2715643")
    assert p_chain == "e,1,2,12,22,212,222,2212"
    assert q_chain == "e,1,11,21,22,212,2112,2212"
    t = yfib.chain_to_tableau("e,1,2,12,22,221,2211,21211")
    assert str(t) == "3:7 6 1:5 4 2"
    assert yfib.tableau_to_chain(t) == "e,1,2,12,22,221,2211,21211"


def test_evacuation():
    p = yfib.insert_p("2715643")
    assert str(yfib.evacuate_letter(p, 7)) == "3:6 4:5 1:2"
    assert str(yfib.evacuation_tableau(p)) == "3:4 5:6 7 1:2"


def test_matrices():
    order, entries = yfib.okada_matrix(5)
    assert order[0] == "221"
    assert entries[0] == [1, 1, 2, 1, 2, 3, 4, 8]
    assert yfib.n_number(yfib.Snakeshape("221"), yfib.Snakeshape("1211")) == 4
    assert yfib.okada_k(yfib.Snakeshape("221"), yfib.Snakeshape("1121")) == 3
    assert yfib.okada_k_by_interval(yfib.Snakeshape("221"), yfib.Snakeshape("1121")) == 3
    assert yfib.zero_pair_count(6) == 5


def test_young_side():
    assert yfib.kostka("41", "221") == 2
    assert yfib.kostka_by_interval("41", "221", "chain") == 2
    assert yfib.kostka_by_interval("41", "221", "weak") == 2
    assert yfib.rsk_shape("1234") == "4"
    assert yfib.dominance_leq("32", "41")


def test_classes_and_shifts():
    cls = yfib.fibo_class(yfib.YfTableau("2:4 1:3"))
    assert sorted(cls) == ["3142", "3412", "4312"]
    targets = yfib.shift_targets(yfib.YfTableau("2:5 4 3 1"))
    assert "2:5 4 1:3" in targets


def test_verify():
    ok, log = yfib.verify("snakeshape", 5)
    assert ok, log
