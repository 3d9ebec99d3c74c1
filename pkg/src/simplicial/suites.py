"""Deterministic verification suites behind ``simplicial verify``.

Each suite returns a ``Report``; random inputs come from fixed seeds so two
runs print byte-identical text.
"""

from __future__ import annotations

import random

from . import adjunction as adj
from . import freemonad as fm
from . import frieze as fz
from . import ordmap
from . import presentation as pr
from . import temperleylieb as tl
from .report import Report

SEED = 20240101


def presentation_suite(max_n: int = 4, samples: int = 400) -> Report:
    report = Report("presentation")
    for n in range(max_n + 1):
        maps = {pr.sigma(pr.blocks_term(nf), n) for nf in pr.enumerate_normal_forms(n)}
        report.record("normal-forms", maps == set(ordmap.enumerate_endos(n)), f"n={n}")
        for family, lhs, rhs in pr.defining_equations(n):
            report.record(f"eq:{family}", pr.sigma(lhs, n) == pr.sigma(rhs, n), f"n={n}")
        for name, lhs, rhs in pr.block_equation_instances(n):
            report.record("blocks", pr.sigma_word(lhs, n) == pr.sigma_word(rhs, n), f"{name} n={n}")
    rng = random.Random(SEED)
    for _ in range(samples):
        n = rng.randint(0, 6)
        t = pr.random_term(rng, n, rng.randint(1, 20))
        blocks, trace = pr.normalize(t, n)
        words = [pr.to_blocks(t)] + [step.word for step in trace]
        descending = all(pr.complexity_mu(b) < pr.complexity_mu(a) for a, b in zip(words, words[1:]))
        report.record("mu-descent", descending, pr.format_term(t))
        sound = pr.validate_normal_form(blocks) and pr.sigma_word(blocks, n) == pr.sigma(t, n)
        report.record("normalize", sound, pr.format_term(t))
    return report


def monad_suite(samples: int = 400) -> Report:
    report = Report("free monad")
    rng = random.Random(SEED)
    for _ in range(samples):
        t = fm.random_term(rng, rng.randint(0, 4), rng.randint(1, 20))
        trace = fm.elimination_trace(t)
        degrees = [fm.composition_degree(t)] + [fm.composition_degree(s) for _, s in trace]
        report.record("degree", all(b < a for a, b in zip(degrees, degrees[1:])))
        word = fm.monad_normal_form(t)
        report.record("G-preserved", fm.functor_G(word.term()) == fm.functor_G(t))
    for n in range(5):
        for m in range(5):
            for f in ordmap.enumerate_maps(n, m):
                report.record("G-inverse", fm.functor_G(fm.from_ordmap(f).term()) == f, str(f))
    for a in range(6):
        T, mu, eta = fm.T, fm.mu, fm.eta
        G = fm.functor_G
        report.record("laws", G(fm.Comp(mu(a), T(mu(a)))) == G(fm.Comp(mu(a), mu(a + 1))), f"a={a}")
        report.record("laws", G(fm.Comp(mu(a), eta(a + 1))) == G(fm.Id(a + 1)), f"a={a}")
        report.record("laws", G(fm.Comp(mu(a), T(eta(a)))) == G(fm.Id(a + 1)), f"a={a}")
    for n in range(2, 7):
        for letter in "pq":
            for i in range(n - 1):
                same = fm.functor_G(fm.embedded_generator(n, letter, i)) == ordmap.generator(n, letter, i)
                report.record("generators", same, f"{letter}{i} n={n}")
    return report


def adjunction_suite(samples: int = 60) -> Report:
    report = Report("adjunction")
    rng = random.Random(SEED)
    for family in adj.EQUATION_FAMILIES:
        for _ in range(samples):
            lhs, rhs = adj.equation_instance(rng, family)
            same = adj.functor_E(lhs) == adj.functor_E(rhs) and adj.adj_normal_form(lhs) == adj.adj_normal_form(rhs)
            report.record(family, same, adj.format_term(lhs))
    for name, lhs, rhs in adj.triangle_instances(5):
        report.record("triangle", adj.functor_E(lhs) == adj.functor_E(rhs), name)
    for n in range(4):
        words = list(adj.enumerate_normal_forms(adj.B(n), adj.B(n)))
        images = {adj.functor_E(w.term()).frieze for w in words}
        expected = {fz.from_endo(ordmap.OrdEndoN.extend(f)) for f in ordmap.enumerate_endos(n)}
        report.record("bijection", len(images) == len(words) and images == expected, f"n={n}")
    for n in range(2, 6):
        for letter in "pq":
            for i in range(n - 1):
                same = adj.to_ordmap(adj.b_generator(n, letter, i)) == ordmap.generator(n, letter, i)
                report.record("generators", same, f"{letter}{i} n={n}")
    return report


def frieze_suite(samples: int = 200) -> Report:
    report = Report("frieze")
    rng = random.Random(SEED)
    for _ in range(samples):
        d1, d2 = fz.random_frieze(rng), fz.random_frieze(rng)
        report.record("round-trip", fz.from_endo(fz.phi(d1)) == d1, str(d1))
        hom = fz.phi(fz.compose(d1, d2)) == ordmap.compose_endo(fz.phi(d1), fz.phi(d2))
        report.record("homomorphism", hom, f"{d1} / {d2}")
    d1 = fz.from_endo(ordmap.OrdEndoN((1, 1, 1, 2, 4), (5, 4)))
    d2 = fz.Frieze(((2, 3), (4, 5)), ((-4, -3), (-6, -5), (-8, -7)), (8, 10))
    both = fz.compose(d1, d2)
    report.record("worked-example", both.cups == ((2, 3), (4, 5), (6, 7), (10, 11))
                  and both.caps == ((-4, -3), (-6, -5), (-8, -7), (-10, -9)), str(both))
    return report


def tl_suite(max_n: int = 4) -> Report:
    report = Report("temperley-lieb")
    for n in range(2, max_n + 1):
        for mode in tl.MODES:
            sub = tl.verify_relations(n, mode)
            report.record("relations", sub.ok, f"n={n} {mode}: {sub.failures[:1]}")
    report.record("cup-cap", tl.verify_cupcap(8).ok)
    report.record("sigma-delta", tl.verify_omega(6).ok)
    for n in range(2, 4):
        seen = set()
        for nf in pr.enumerate_normal_forms(n):
            t = pr.blocks_term(nf)
            diagram = tl.eval_word(tl.embed_On_term(t, n), 2 * n)
            report.record("square", diagram == tl.endo_to_tl(pr.sigma(t, n)), pr.format_blocks(nf))
            seen.add(diagram)
        report.record("injective", len(seen) == len(ordmap.enumerate_endos(n)), f"n={n}")
    return report


SUITES = {
    "presentation": presentation_suite,
    "monad": monad_suite,
    "adjunction": adjunction_suite,
    "frieze": frieze_suite,
    "tl-embedding": tl_suite,
}


def run(name: str) -> list[Report]:
    if name == "all":
        return [suite() for suite in SUITES.values()]
    return [SUITES[name]()]
