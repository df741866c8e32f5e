import json
import random

import pytest

from coprobber.generators import generate
from coprobber.embedding import (
    EmbeddingScheme,
    SchemeError,
    add_crosscap,
    euler_characteristic,
    euler_genus,
    face_count,
    is_orientable_scheme,
    random_scheme,
    relabel_scheme,
    scheme_from_faces,
    scheme_from_json,
    scheme_to_json,
    switch_vertex,
    to_all_positive,
    trace_faces,
    validate_scheme,
)


def _triangle_scheme(signs=(1, 1, 1)) -> EmbeddingScheme:
    return EmbeddingScheme.build(
        3, [(0, 1), (0, 2), (1, 2)], [[0, 1], [0, 2], [1, 2]], signs
    )


def test_planar_triangle():
    s = _triangle_scheme()
    walks = trace_faces(s)
    assert walks.count == 2
    assert sorted(walks.lengths) == [3, 3]
    assert euler_characteristic(s) == 2
    assert euler_genus(s) == 0
    assert is_orientable_scheme(s)


def test_projective_triangle():
    # one negative edge on a cycle gives the projective plane
    s = _triangle_scheme((1, 1, -1))
    walks = trace_faces(s)
    assert walks.count == 1
    assert walks.lengths == (6,)
    assert euler_genus(s) == 1
    assert not is_orientable_scheme(s)


def test_face_walk_edge_sides_sum():
    rng = random.Random(10)
    for _ in range(40):
        g = generate("random_gnp", (rng.randint(2, 9), 60), seed=rng.randint(0, 10**6))
        if not g.is_connected():
            continue
        s = random_scheme(g, seed=rng.randint(0, 10**6))
        walks = trace_faces(s)
        assert sum(walks.lengths) == 2 * len(s.edges)
        assert euler_genus(s) >= 0


def test_switching_preserves_surface():
    rng = random.Random(11)
    trials = 0
    while trials < 30:
        g = generate("random_gnp", (rng.randint(3, 8), 70), seed=rng.randint(0, 10**6))
        if not g.is_connected():
            continue
        trials += 1
        s = random_scheme(g, seed=rng.randint(0, 10**6))
        v = rng.randrange(s.n)
        t = switch_vertex(s, v)
        assert euler_genus(t) == euler_genus(s)
        assert face_count(t) == face_count(s)
        assert is_orientable_scheme(t) == is_orientable_scheme(s)


def test_to_all_positive_on_orientable():
    # the double-signed triangle is orientable in disguise
    s = _triangle_scheme(((-1), (-1), 1))
    assert is_orientable_scheme(s)
    t = to_all_positive(s)
    assert all(x > 0 for x in t.signature)
    assert euler_genus(t) == euler_genus(s) == 0


def test_nonorientable_never_all_positive():
    s = _triangle_scheme((1, 1, -1))
    assert not is_orientable_scheme(s)
    with pytest.raises(SchemeError):
        to_all_positive(s)


def test_add_crosscap_steps_genus():
    s = _triangle_scheme()
    t = add_crosscap(s)
    assert not is_orientable_scheme(t)
    assert euler_genus(t) == 1
    with pytest.raises(SchemeError):
        add_crosscap(t)  # already non-orientable


def test_add_crosscap_needs_cycle():
    tree = EmbeddingScheme.build(3, [(0, 1), (0, 2)], [[0, 1], [0], [1]], (1, 1))
    with pytest.raises(SchemeError):
        add_crosscap(tree)


def test_scheme_from_faces_k4():
    faces = [[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]]
    s = scheme_from_faces(4, faces)
    assert face_count(s) == 4
    assert euler_genus(s) == 0
    assert is_orientable_scheme(s)


def test_scheme_from_faces_rejects_bad_multiplicity():
    with pytest.raises(SchemeError):
        scheme_from_faces(3, [[0, 1, 2]])  # each edge only once


def test_validate_scheme_catches_garbage():
    s = EmbeddingScheme(
        3,
        ((0, 1), (0, 2), (1, 2)),
        ((0, 1), (0,), (1, 2)),  # rotation at 1 misses edge 2
        (1, 1, 1),
    )
    problems = validate_scheme(s)
    assert problems


def test_relabel_preserves_surface():
    rng = random.Random(12)
    s = random_scheme(generate("petersen"), seed=3)
    perm = list(range(10))
    rng.shuffle(perm)
    t = relabel_scheme(s, perm)
    assert euler_genus(t) == euler_genus(s)
    assert is_orientable_scheme(t) == is_orientable_scheme(s)
    assert sorted(trace_faces(t).lengths) == sorted(trace_faces(s).lengths)


def test_json_roundtrip():
    s = _triangle_scheme((1, -1, 1))
    data = json.loads(json.dumps(scheme_to_json(s)))
    assert scheme_from_json(data) == s


def test_single_vertex_sphere():
    s = EmbeddingScheme(1, (), ((),), ())
    assert face_count(s) == 1
    assert euler_characteristic(s) == 2
    assert euler_genus(s) == 0
