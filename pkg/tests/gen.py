"""Seeded random experience builder, shared by the oracle and property
tests. Experiences are produced as micro-theory text and parsed, so they
exercise the same path as file input."""

from __future__ import annotations

import random

from analogist.kr import DEFAULT_CONVENTIONS, parse_experience

# A shared predicate pool so two random experiences usually have some
# overlapping vocabulary. Categories come from the name suffixes.
UNARY = ("rough", "shiny", "heavy", "warmAff", "openAff", "restDes",
         "moveDes", "doneTf", "wetTf", "sizeFn", "speedFn")
BINARY = ("near", "holds", "above", "likes", "serves")
CONNECTIVES = ("and", "implies", "causes", "why")


def random_experience(
    rng: random.Random,
    entity_pool: tuple[str, ...],
    max_roots: int = 12,
    experience_id: str = "rand",
):
    n_leaves = rng.randint(1, max(1, max_roots - 2))
    lines = []
    leaves = []
    for _ in range(n_leaves):
        if rng.random() < 0.55:
            pred = rng.choice(UNARY)
            args = [rng.choice(entity_pool)]
        else:
            pred = rng.choice(BINARY)
            args = [rng.choice(entity_pool), rng.choice(entity_pool)]
        leaves.append("(" + " ".join([pred] + args) + ")")
    n_compound = rng.randint(0, max_roots - n_leaves)
    compounds = []
    for _ in range(n_compound):
        conn = rng.choice(CONNECTIVES)
        pool = leaves + compounds
        a = rng.choice(pool)
        b = rng.choice(pool)
        compounds.append(f"({conn} {a} {b})")
    statements = leaves + compounds
    rng.shuffle(statements)
    lines.extend(statements[:max_roots])
    return parse_experience(
        "\n".join(lines), DEFAULT_CONVENTIONS, experience_id
    )


def random_pair(rng: random.Random, max_roots: int = 12):
    base = random_experience(
        rng, ("a", "b", "c", "d"), max_roots, experience_id="rand_base"
    )
    target = random_experience(
        rng, ("p", "q", "r", "s"), max_roots, experience_id="rand_target"
    )
    return base, target
