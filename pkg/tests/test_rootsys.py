from fractions import Fraction as Q

import pytest

from quadalg.exactmat import det, freeze, mat_mul, transpose
from quadalg.rootsys import (
    FoldingError,
    LatticeEmbedding,
    build_root_datum,
    canonical_form,
    coroot_values,
    diagram_automorphism,
    fold,
    rost_multiplier,
    sl_block_diagonal_embedding,
    sl_corner_embedding,
)


def test_build_examples():
    assert build_root_datum("A1").cartan == ((2,),)
    assert det(build_root_datum("E6").cartan) == 3
    f4 = build_root_datum("F4")
    assert sorted(set(coroot_values(f4).values())) == [1, 2]
    with pytest.raises(ValueError):
        build_root_datum("H4")
    with pytest.raises(ValueError):
        build_root_datum("E9")


def test_known_cartans():
    assert build_root_datum("B3").cartan == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))
    assert build_root_datum("C3").cartan == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    assert build_root_datum("G2").cartan == ((2, -3), (-1, 2))
    b = build_root_datum("B4").cartan
    c = build_root_datum("C4").cartan
    assert transpose(b) == c


def test_root_counts():
    for label, count in [("A2", 6), ("B2", 8), ("G2", 12), ("D4", 24), ("E6", 72), ("F4", 48)]:
        rd = build_root_datum(label)
        assert len(rd.all_coroots()) == count


def test_canonical_form_properties():
    for label in ("A3", "B3", "C3", "D4", "F4", "G2", "E6"):
        rd = build_root_datum(label)
        cf = canonical_form(rd)  # raises if not Weyl-invariant
        values = coroot_values(rd)
        assert min(values.values()) == 1
        assert all(v == int(v) and v > 0 for v in values.values())
        # Gram = Cartan/2 iff simply laced
        laced = rd.series in ("A", "D", "E")
        half = all(
            2 * cf.gram[i][j] == rd.cartan[i][j]
            for i in range(rd.rank)
            for j in range(rd.rank)
        )
        assert half == laced


def test_g2_values():
    assert sorted(set(coroot_values(build_root_datum("G2")).values())) == [1, 3]


def test_diagram_automorphisms():
    e6 = build_root_datum("E6")
    perm = diagram_automorphism(e6)
    assert sorted(perm) == list(range(6)) and perm != tuple(range(6))
    with pytest.raises(ValueError):
        diagram_automorphism(build_root_datum("F4"))
    with pytest.raises(ValueError):
        fold(e6, perm=(1, 0, 2, 3, 4, 5))  # not an automorphism


def test_foldings():
    cases = {
        ("E6", ""): ("F4", [1, 1, 2, 2]),
        ("D4", "triality"): ("G2", [3, 1]),
        ("D5", ""): ("B4", [1, 1, 1, 2]),
        ("D8", ""): ("B7", [1, 1, 1, 1, 1, 1, 2]),
        ("A3", ""): ("C2", [2, 1]),
        ("A5", ""): ("C3", [2, 2, 1]),
        ("A7", ""): ("C4", [2, 2, 2, 1]),
    }
    for (label, name), (folded, sizes) in cases.items():
        fr = fold(build_root_datum(label), name=name)
        assert fr.folded.label == folded
        assert sorted(fr.orbit_sizes) == sorted(sizes)
        # the orbit sums really carry the q-value = orbit size
        rd = build_root_datum(label)
        cf = canonical_form(rd)
        for col, orbit in enumerate(fr.orbits):
            v = [fr.embedding.matrix[i][col] for i in range(rd.rank)]
            assert cf.value(v) == len(orbit)
        assert rost_multiplier(fr.embedding, fr.folded, rd) == 1


def test_a2l_fold_rejected():
    for l in (1, 2, 3):
        with pytest.raises(FoldingError) as exc:
            fold(build_root_datum(f"A{2 * l}"))
        assert exc.value.reason == "nonreduced-BC"


def test_sl_embeddings():
    for n in (2, 3, 4):
        src = build_root_datum(f"A{n - 1}")
        tgt = build_root_datum(f"A{2 * n - 1}")
        assert rost_multiplier(sl_block_diagonal_embedding(n), src, tgt) == 2
        assert rost_multiplier(sl_corner_embedding(n), src, tgt) == 1


def test_embedding_validation():
    with pytest.raises(ValueError):
        LatticeEmbedding(freeze([[1, 1], [1, 1], [0, 0]]))  # rank 1
    a2 = build_root_datum("A2")
    a3 = build_root_datum("A3")
    # e1, e3 are orthogonal in A3, so the pullback cannot be a multiple
    # of the A2 form: rejected as not coroot-compatible
    bad = LatticeEmbedding(freeze([[1, 0], [0, 0], [0, 1]]))
    with pytest.raises(ValueError):
        rost_multiplier(bad, a2, a3)
    # rank-1 sources are always proportional; multiplier = value of image
    a1 = build_root_datum("A1")
    b2 = build_root_datum("B2")
    diag = LatticeEmbedding(freeze([[1], [1]]))
    assert rost_multiplier(diag, a1, b2) == 1


def test_folded_cartan_is_f4():
    e6 = build_root_datum("E6")
    fr = fold(e6)
    cf = canonical_form(e6)
    m = len(fr.orbits)
    sums = [
        [fr.embedding.matrix[i][col] for i in range(6)] for col in range(m)
    ]
    cartan = [
        [
            int(2 * cf.bilinear(sums[i], sums[j]) / cf.bilinear(sums[i], sums[i]))
            for j in range(m)
        ]
        for i in range(m)
    ]
    f4 = build_root_datum("F4")
    assert freeze(cartan) == transpose(f4.cartan)
