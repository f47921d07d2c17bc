#!/usr/bin/env python3
"""Generate the bundled sample corpus and seed list under fixtures/.

The corpus is synthetic. It is constructed so that the seed-centric
co-authorship networks grow exactly along the reference timeline tables
(two tracked seeds plus a 37-seed aggregate), and so that the per-seed
factor columns (paper counts, phrase hits, bag hits) have prescribed
median splits and run counts in alphabetical seed order.

Output is deterministic. Re-run with:

    python3 scripts/gen_fixture.py
"""

import itertools
import json
import random
import re
import sys
import unicodedata
from collections import defaultdict
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "fixtures"

YEARS = list(range(1990, 2016))

# year -> (seeds, papers, vertices, edges), cumulative
AGGREGATE = {
    1990: (1, 1, 2, 1), 1991: (1, 1, 2, 1), 1992: (1, 1, 2, 1), 1993: (1, 1, 2, 1),
    1994: (1, 1, 2, 1), 1995: (2, 2, 4, 2), 1996: (2, 3, 6, 5), 1997: (3, 4, 9, 8),
    1998: (3, 5, 9, 8), 1999: (4, 8, 12, 11), 2000: (5, 12, 18, 25), 2001: (8, 15, 27, 37),
    2002: (9, 20, 33, 48), 2003: (11, 29, 53, 109), 2004: (12, 35, 59, 123),
    2005: (19, 50, 86, 221), 2006: (20, 63, 99, 245), 2007: (23, 84, 123, 310),
    2008: (25, 107, 139, 353), 2009: (28, 171, 204, 606), 2010: (30, 223, 251, 734),
    2011: (35, 346, 381, 1107), 2012: (37, 396, 425, 1249), 2013: (37, 446, 489, 1440),
    2014: (37, 509, 536, 1588), 2015: (37, 554, 582, 1714),
}

# tracked seeds: year -> (papers, vertices, edges), cumulative
AAB_NAME = "Azuraliza Abu Bakar"
SAMN_NAME = "Shahrul Azman Mohd Noah"
TRACKED = {
    AAB_NAME: {
        2001: (1, 4, 6), 2002: (2, 4, 6), 2003: (2, 4, 6), 2004: (2, 4, 6),
        2005: (3, 6, 9), 2006: (3, 6, 9), 2007: (4, 7, 11), 2008: (22, 15, 30),
        2009: (37, 40, 189), 2010: (42, 53, 219), 2011: (50, 60, 265),
        2012: (59, 68, 295), 2013: (60, 68, 295), 2014: (64, 72, 302),
        2015: (69, 80, 329),
    },
    SAMN_NAME: {
        1995: (1, 2, 1), 1996: (1, 2, 1), 1997: (1, 2, 1), 1998: (2, 2, 1),
        1999: (3, 2, 1), 2000: (4, 3, 2), 2001: (4, 3, 2), 2002: (5, 5, 5),
        2003: (6, 12, 33), 2004: (8, 13, 37),
        # every joining vertex brings an edge to the seed, so 2006-2008
        # (+1v/+0e, then +4v/+4e over three papers) is unreachable from 51
        2005: (14, 19, 50),
        2006: (15, 20, 51),
        2007: (17, 23, 55), 2008: (18, 24, 56), 2009: (23, 42, 198),
        2010: (32, 57, 238), 2011: (41, 73, 275), 2012: (47, 76, 281),
        2013: (47, 76, 281), 2014: (48, 80, 304), 2015: (53, 86, 313),
    },
}
# joint paper of the two tracked seeds: year -> number of fresh co-authors
JOINT = {2009: 12}

RNG = random.Random(20151231)


def c2(n):
    return n * (n - 1) // 2


def pairs(xs):
    xs = sorted(xs)
    return [(a, b) for i, a in enumerate(xs) for b in xs[i + 1:]]


class Net:
    def __init__(self):
        self.verts = set()
        self.edges = set()

    def delta(self, authors):
        dv = sum(1 for a in authors if a not in self.verts)
        de = sum(1 for p in pairs(authors) if p not in self.edges)
        return dv, de

    def add(self, authors):
        self.verts.update(authors)
        self.edges.update(pairs(authors))

    def adjacent(self, a, b):
        return (min(a, b), max(a, b)) in self.edges

    def copy(self):
        n = Net()
        n.verts = set(self.verts)
        n.edges = set(self.edges)
        return n


class World:
    def __init__(self):
        self.glob = Net()
        self.nets = {}
        self.seed_papers = defaultdict(list)
        self.papers = []
        self.seeds = set()
        self.next_actor = 0

    def fresh(self, n):
        ids = list(range(self.next_actor, self.next_actor + n))
        self.next_actor += n
        return ids

    def add(self, year, authors, kind):
        authors = tuple(sorted(set(authors)))
        self.glob.add(authors)
        for s in authors:
            if s in self.seeds:
                self.nets.setdefault(s, Net()).add(authors)
                self.seed_papers[s].append(authors)
        self.papers.append((year, authors, kind))

    def net(self, s):
        return self.nets.setdefault(s, Net())


# ---------------------------------------------------------------- planning


def min_edges(v, k):
    """Least edges for v fresh vertices spread over at most k papers."""
    if v == 0:
        return 0
    if k <= 0:
        return 10 ** 9
    k = min(k, v)
    q, r = divmod(v, k)
    return (k - r) * c2(q + 1) + r * c2(q + 2)


class PlanState:
    def __init__(self, net, cliques, next_tmp=-1):
        self.net = net
        self.cliques = cliques
        self.next_tmp = next_tmp

    def copy(self):
        return PlanState(self.net.copy(), {k: list(v) for k, v in self.cliques.items()}, self.next_tmp)

    def tmp(self, n):
        ids = list(range(self.next_tmp, self.next_tmp - n, -1))
        self.next_tmp -= n
        return ids

    def apply(self, authors, seeds):
        self.net.add(authors)
        for s in authors:
            if s in seeds:
                c = tuple(sorted(a for a in authors if a != s))
                if c:
                    self.cliques.setdefault(s, []).append(c)


def seed_moves(st, s, v_rem, e_rem, partners=(), exclude=frozenset()):
    """Candidate author sets for a paper of seed s (fresh ids as None)."""
    nbrs = {u for u in st.net.verts if u != s and u not in exclude and st.net.adjacent(s, u)}
    cl = sorted(set(c for c in st.cliques.get(s, []) if not exclude.intersection(c)), key=lambda c: (-len(c), c))[:3]
    out = []
    present = s in st.net.verts
    if v_rem > 0:
        sizes = sorted(set(list(range(1, 9)) + [10, 12, 14, 16, 20, v_rem - (0 if present else 1)]))
        xs = [()]
        for c in cl:
            for k in range(1, len(c) + 1):
                xs.append(c[:k])
                for o in sorted(nbrs - set(c))[:2]:
                    xs.append(c[:k] + (o,))
        for p in partners:
            xs.append((p,))
        for a in sizes:
            if a < 0 or a + (0 if present else 1) > v_rem:
                continue
            if a == 0 and present:
                continue
            for x in xs:
                out.append(("new", s, a, tuple(x)))
    if not present:
        return out
    ind = independent_set(st.net, nbrs)
    for m in range(2, len(ind) + 1):
        if c2(m) > e_rem:
            break
        out.append(("old", s, 0, tuple(ind[:m])))
    for c in cl:
        others = [x for x in sorted(nbrs) if x not in c and all(not st.net.adjacent(x, y) for y in c)]
        if others:
            x = others[0]
            for k in range(1, min(len(c), e_rem) + 1):
                out.append(("old", s, 0, (x,) + c[:k]))
    for p in partners:
        if p != s and p in st.net.verts and not st.net.adjacent(s, p):
            out.append(("old", s, 0, (p,)))
    return out


def independent_set(net, verts):
    out = []
    for v in sorted(verts):
        if all(not net.adjacent(v, u) for u in out):
            out.append(v)
    return out


def plan(st, seeds_for_step, v, e, p, seedset, budget=300000, ratio_hint=True):
    """DFS for a list of papers with exact (v, e) growth of st.net in <= p papers.

    seeds_for_step(st, depth) -> list of (seed, partners) to try at this depth.
    """
    counter = [0]

    def dfs(st, v_rem, e_rem, left, depth, acc):
        counter[0] += 1
        if counter[0] > budget:
            return None
        forced = seeds_for_step(st, depth)
        if v_rem == 0 and e_rem == 0 and not forced[1]:
            return acc
        if left == 0:
            return None
        if e_rem < min_edges(max(v_rem - forced[2], 0), left):
            return None
        cands = []
        for s, partners in forced[0]:
            for mv in seed_moves(st, s, v_rem, e_rem, partners, seedset - {s} - set(partners)):
                _, s_, a, x = mv
                authors = [s_] + [None] * a + list(x)
                n_fresh = a
                dv = n_fresh + (0 if s_ in st.net.verts else 1) + sum(1 for y in x if y not in st.net.verts)
                known = [y for y in authors if y is not None]
                de = sum(1 for pr in pairs(known) if pr not in st.net.edges)
                de += c2(n_fresh) + n_fresh * len(known)
                if dv > v_rem or de > e_rem:
                    continue
                cands.append((dv, de, mv))
        target = e_rem / max(v_rem, 1)

        def key(c):
            dv, de, mv = c
            nv, ne = v_rem - dv, e_rem - de
            if nv == 0:
                return (0, -de, 0)
            return (1, abs(ne / nv - target) if ratio_hint else 0, -dv)

        cands.sort(key=key)
        seen = set()
        for dv, de, mv in cands:
            if (dv, de) in seen:
                continue
            seen.add((dv, de))
            nv, ne = v_rem - dv, e_rem - de
            if nv > 0 and left - 1 == 0:
                continue
            nxt = st.copy()
            _, s_, a, x = mv
            authors = [s_] + nxt.tmp(a) + list(x)
            nxt.apply(authors, seedset)
            r = dfs(nxt, nv, ne, left - 1, depth + 1, acc + [authors])
            if r is not None:
                return r
        return None

    return dfs(st, v, e, p, 0, [])


def realize(world, year, papers, kind):
    mapping = {}
    out = []
    for authors in papers:
        real = []
        for a in authors:
            if a < 0:
                if a not in mapping:
                    mapping[a] = world.fresh(1)[0]
                real.append(mapping[a])
            else:
                real.append(a)
        world.add(year, real, kind)
        out.append(tuple(sorted(real)))
    return out


# ---------------------------------------------------------------- structure


def build_structure():
    w = World()
    aab, samn = w.fresh(2)
    tracked_ids = {AAB_NAME: aab, SAMN_NAME: samn}
    w.seeds.update(tracked_ids.values())
    starts = {AAB_NAME: min(TRACKED[AAB_NAME]), SAMN_NAME: min(TRACKED[SAMN_NAME])}
    filler = []  # (id, start year)
    slots = {}
    prev = (0, 0, 0, 0)
    for y in YEARS:
        cur = AGGREGATE[y]
        d_s, d_p, d_v, d_e = (cur[i] - prev[i] for i in range(4))
        prev = cur
        base_p = len(w.papers)
        if y in JOINT:
            w.add(y, [aab, samn] + w.fresh(JOINT[y]), "joint")
        for name, tid in tracked_ids.items():
            tgt = TRACKED[name].get(y)
            if tgt is None:
                continue
            net = w.net(tid)
            have = (len(w.seed_papers[tid]), len(net.verts), len(net.edges))
            p, v, e = (tgt[i] - have[i] for i in range(3))
            assert p >= 0 and v >= 0 and e >= 0, (name, y, p, v, e)
            st = PlanState(net.copy(), {tid: [tuple(a for a in pp if a != tid) for pp in w.seed_papers[tid]]})
            if v == 0 and e == 0:
                papers = []
            else:
                papers = plan(st, lambda st, d, tid=tid: ([(tid, ())], False, 0 if tid in st.net.verts else 1), v, e, p, set(w.seeds))
                if papers is None:
                    sys.exit(f"no plan for {name} {y}: p={p} v={v} e={e}")
            realize(w, y, papers, "tracked")
            for _ in range(p - len(papers)):
                w.add(y, repeat_of(w, tid), "tracked-repeat")
        n_new = d_s - sum(1 for n in starts if starts[n] == y)
        new_ids = w.fresh(n_new)
        w.seeds.update(new_ids)
        filler.extend((s, y) for s in new_ids)
        got_p = len(w.papers) - base_p
        got_v = len(w.glob.verts) - (AGGREGATE[y - 1][2] if y > YEARS[0] else 0)
        got_e = len(w.glob.edges) - (AGGREGATE[y - 1][3] if y > YEARS[0] else 0)
        rp, rv, re_ = d_p - got_p, d_v - got_v, d_e - got_e
        active = [s for s, sy in filler if sy < y]
        fset = set(s for s, _ in filler)
        cliques = {s: [tuple(a for a in pp if a != s) for pp in w.seed_papers[s]] for s in active}
        st = PlanState(w.glob.copy(), cliques)
        order = sorted(active, key=lambda s: -len(w.net(s).verts))
        light = sorted(active, key=lambda s: (len(w.seed_papers[s]), s))

        def step(st, depth, new_ids=new_ids, order=order):
            pending = [s for s in new_ids if s not in st.net.verts]
            if pending:
                partners = tuple(order[:2])
                return ([(pending[0], partners)], True, len(pending))
            k = depth % max(len(light), 1)
            pick = (light[k:] + light[:k])[:3]
            return ([(s, tuple(o for o in pick if o != s)) for s in pick + order[:1]], False, 0)

        papers = plan(st, step, rv, re_, rp, fset)
        if papers is None:
            sys.exit(f"no filler plan for {y}")
        realize(w, y, papers, "filler")
        slots[y] = rp - len(papers)
        assert slots[y] >= 0
        assert len(w.glob.verts) == cur[2] and len(w.glob.edges) == cur[3], (y, len(w.glob.verts), len(w.glob.edges))
    return w, tracked_ids, filler, slots


def repeat_of(w, s):
    first = w.seed_papers[s][0]
    others = [a for a in first if a != s and a not in w.seeds]
    return [s] + others[:1]


# ---------------------------------------------------------------- names

SEED_NAMES = [
    "Aisyah Kamaruddin", "Amirul Hakim Zulkifli", "Bahari Idris", "Chong Wei Lun",
    "Dalila Safiah Harun", "Emran Syafiq Yusoff", "Farahwahida Jamil", "Ghazali Saad",
    "Hafizah Mokhtar", "Haslinda Ramli", "Ismail Lokman", "Jamaludin Osman",
    "Kartini Baharom", "Khairul Anwar Sidek", "Lim Siew Ping", "Marlina Husin",
    "Masnizah Tajudin", "Nazlia Omar", "Norleyza Jailani", "Nur Fazidah Elias",
    "Ravichandran Muthu", "Riza Sulaiman", "Rozilawati Dollah", "Salwani Hamdan",
    "Sabrina Tiun", "Suhaila Zainudin", "Tengku Siti Meriam", "Umi Kalsom Yusof",
    "Wan Fariza Paizi", "Yap Kian Meng", "Zalinda Othman", "Zarina Shukur",
    "Zulkarnain Ariffin", "Hairulliza Judi", "Kauthar Sahari",
]

GIVEN = [
    "Adam", "Adibah", "Afiq", "Ahmad", "Aina", "Akmal", "Alia", "Amalina", "Amar", "Anis",
    "Arif", "Asma", "Atiqah", "Azlan", "Badrul", "Balqis", "Danial", "Dayang", "Dian",
    "Erna", "Fadzil", "Faiz", "Farid", "Fatin", "Firdaus", "Hamzah", "Hana", "Haris",
    "Haziq", "Hidayah", "Ilham", "Iman", "Intan", "Irfan", "Izzati", "Jun", "Kamal",
    "Khadijah", "Liyana", "Luqman", "Mei", "Muaz", "Munirah", "Nabil", "Nadia", "Naim",
    "Najwa", "Nasir", "Noor", "Nurin", "Qistina", "Rafiq", "Rahim", "Raihan",
    "Rashid", "Rina", "Rizal", "Safwan", "Sakinah", "Shafiq", "Sofia", "Suraya", "Syazwan",
    "Taufik", "Ummi", "Wafa", "Xin", "Yasmin", "Yusri", "Zahid", "Zara", "Zikri",
    "Kenji", "Hiro", "Anand", "Priya", "Daniel", "Marco", "Elena", "Tomas", "Ingrid",
]
SURNAMES = [
    "Abdullah", "Ahmad", "Aziz", "Bakri", "Chan", "Daud", "Fauzi", "Ghani", "Halim",
    "Hamid", "Hashim", "Hussin", "Ibrahim", "Ishak", "Jaafar", "Kassim", "Khalid",
    "Latif", "Lee", "Mahmud", "Majid", "Mansor", "Nasir", "Ng", "Rahman",
    "Razak", "Salleh", "Samad", "Sharif", "Tan", "Teh", "Wahab", "Yaacob", "Yahya",
    "Zakaria", "Kumar", "Rao", "Suzuki", "Tanaka", "Rossi", "Novak", "Berg", "Silva",
]

TOPICS = [
    "rough", "set", "fuzzy", "clustering", "classification", "ontology", "semantic",
    "retrieval", "mining", "association", "rules", "neural", "network", "genetic",
    "algorithm", "scheduling", "optimization", "feature", "selection", "text",
    "summarization", "sentiment", "analysis", "image", "segmentation", "recognition",
    "speech", "malay", "corpus", "question", "answering", "knowledge", "management",
    "e-learning", "mobile", "agents", "wireless", "sensor", "security", "intrusion",
    "detection", "time", "series", "prediction", "medical", "diagnosis", "decision",
    "support", "visualization", "database", "query", "web", "services", "cloud",
    "evaluation", "framework", "model", "approach", "hybrid", "adaptive", "multi",
    "objective", "temporal", "spatial", "graph", "learning", "data", "stream",
]
TITLE_FORMS = [
    "A {a} {b} approach for {c} {d}",
    "{A} {b} using {c} {d}",
    "Towards {a} {b} in {c} {d}",
    "An {a} {b} framework for {c}",
    "Improving {a} {b} with {c} {d}",
    "{A} and {b} {c}: a case study",
    "On the {a} of {b} {c} {d}",
    "Hybrid {a} {b} for {c} {d} problems",
]


def title(rng):
    w = rng.sample(TOPICS, 4)
    form = rng.choice(TITLE_FORMS)
    return form.format(a=w[0], b=w[1], c=w[2], d=w[3], A=w[0].capitalize())


def name_tokens(name):
    folded = unicodedata.normalize("NFD", name)
    folded = "".join(ch for ch in folded if not unicodedata.combining(ch)).lower()
    return [t for t in re.split(r"[^0-9a-z]+", folded) if t]


# ---------------------------------------------------------------- factor columns


def runs(labels):
    return 1 + sum(1 for a, b in zip(labels, labels[1:]) if a != b)


def label_seq(rng, n_hi, n_lo, r, fixed=None):
    fixed = fixed or {}
    while True:
        seq = [1] * n_hi + [0] * n_lo
        rng.shuffle(seq)
        if runs(seq) == r and all(seq[i] == v for i, v in fixed.items()):
            return seq


def var_pop(xs):
    m = sum(xs) / len(xs)
    return sum((x - m) ** 2 for x in xs) / len(xs)


def alpha(cols):
    k = len(cols)
    total = [sum(c[i] for c in cols) for i in range(len(cols[0]))]
    return k / (k - 1) * (1 - sum(var_pop(c) for c in cols) / var_pop(total))


def tune_hits(rng, npapers, q_labels, b_labels, target=0.64, tol=2e-5):
    """Pick phrase/bag hit counts with fixed median splits and alpha near target."""
    n = len(npapers)
    m1 = max(npapers) + 10
    hcq = [m1 + rng.randint(0, 60) if q_labels[i] else npapers[i] + rng.randint(0, 4) for i in range(n)]
    hcq[q_labels.index(1)] = m1
    m2 = max(max(hcq), m1) + 20

    def fix_b(hcb):
        for i in range(n):
            if b_labels[i]:
                hcb[i] = max(hcb[i], m2, hcq[i])
            else:
                hcb[i] = min(max(hcb[i], hcq[i]), m2 - 1)
        hcb[b_labels.index(1)] = m2
        return hcb

    hcb = fix_b([m2 + rng.randint(0, 120) if b_labels[i] else hcq[i] + rng.randint(0, 6) for i in range(n)])
    if max(hcq[i] for i in range(n) if not b_labels[i]) >= m2:
        raise RuntimeError("bag threshold below a phrase count")

    def score(q, b):
        return abs(alpha([npapers, q, b]) - target)

    best = score(hcq, hcb)
    pinned_q = q_labels.index(1)
    pinned_b = b_labels.index(1)
    for it in range(400000):
        if best < tol:
            break
        q, b = list(hcq), list(hcb)
        i = rng.randrange(n)
        step = rng.choice([-7, -3, -1, 1, 3, 7])
        if rng.random() < 0.5 and i != pinned_q:
            q[i] += step
            lo, hi = (m1 + 1, m2 - 1 + 400) if q_labels[i] else (npapers[i], m1 - 1)
            if not (lo <= q[i] <= hi):
                continue
            if not b_labels[i] and q[i] > b[i]:
                continue
            if b_labels[i] and q[i] > b[i]:
                b[i] = q[i]
            if not b_labels[i] and q[i] >= m2:
                continue
        elif i != pinned_b:
            b[i] += step
            lo, hi = (max(m2 + 1, q[i]), m2 + 600) if b_labels[i] else (q[i], m2 - 1)
            if not (lo <= b[i] <= hi):
                continue
        else:
            continue
        s = score(q, b)
        if s < best:
            hcq, hcb, best = q, b, s
    return hcq, hcb, alpha([npapers, hcq, hcb])


# ---------------------------------------------------------------- assembly


def main():
    w, tracked_ids, filler, slots = build_structure()
    rng = random.Random(7)
    names = sorted(SEED_NAMES + [AAB_NAME, SAMN_NAME], key=lambda n: " ".join(name_tokens(n)))
    pos = {n: i for i, n in enumerate(names)}
    n_seeds = len(names)

    al = label_seq(rng, 13, 24, 18)
    np_hi = label_seq(rng, 19, 18, 21, {pos[AAB_NAME]: 1, pos[SAMN_NAME]: 1})
    q_hi = label_seq(rng, 19, 18, 17)
    b_hi = label_seq(rng, 19, 18, 19)

    structural = {s: len(w.seed_papers[s]) for s, _ in filler}
    start = dict(filler)
    hi_pos = [i for i in range(n_seeds) if np_hi[i] and names[i] not in tracked_ids]
    lo_pos = [i for i in range(n_seeds) if not np_hi[i]]
    by_count = sorted(structural, key=lambda s: (-structural[s], s))
    # heaviest seeds go to high positions, the rest are shuffled
    heavy = [s for s in by_count if structural[s] > 13]
    rest = [s for s in by_count if structural[s] <= 13]
    rng.shuffle(rest)
    hi_ids = heavy + rest[: len(hi_pos) - len(heavy)]
    lo_ids = rest[len(hi_pos) - len(heavy):]
    rng.shuffle(hi_ids)
    seed_at = {}
    for i, s in zip(hi_pos, hi_ids):
        seed_at[i] = s
    for i, s in zip(lo_pos, lo_ids):
        seed_at[i] = s
    for n, tid in tracked_ids.items():
        seed_at[pos[n]] = tid
    id_name = {seed_at[i]: names[i] for i in range(n_seeds)}

    # paper-count targets: lows stay <= 13, the smallest high is exactly 14
    total_slots = sum(slots.values())
    target = {}
    for s in lo_ids:
        target[s] = min(13, structural[s] + rng.randint(0, 2))
    lows = [s for s in hi_ids if structural[s] <= 14]
    pinned = lows[0]
    for s in hi_ids:
        target[s] = max(14, structural[s])
    left = total_slots - sum(target[s] - structural[s] for s in target)
    assert left >= 0, left
    growable = [s for s in hi_ids if s != pinned]
    while left > 0:
        s = rng.choice(growable)
        target[s] += 1
        left -= 1

    # hand slots out latest-year first to the latest-starting seeds
    deficit = {s: target[s] - structural[s] for s in target}
    slot_owner = defaultdict(list)
    for y in sorted(slots, reverse=True):
        for _ in range(slots[y]):
            cands = [s for s in deficit if deficit[s] > 0 and start[s] <= y]
            if not cands:
                sys.exit(f"slot in {y} has no taker")
            s = max(cands, key=lambda s: (start[s], deficit[s], -s))
            deficit[s] -= 1
            slot_owner[y].append(s)
    assert all(v == 0 for v in deficit.values()), deficit
    for y in sorted(slot_owner):
        for s in slot_owner[y]:
            w.add(y, repeat_of(w, s), "repeat")

    npapers = [len(w.seed_papers[seed_at[i]]) for i in range(n_seeds)]
    vals = sorted(npapers)
    assert vals[18] == 14 and sum(1 for v in npapers if v >= 14) == 19, vals
    assert runs([1 if v >= 14 else 0 for v in npapers]) == 21

    hcq, hcb, a = tune_hits(rng, npapers, q_hi, b_hi)
    print(f"alpha {a:.6f}", file=sys.stderr)

    # -------- names for everyone else
    pool = []
    for g in GIVEN:
        for s in SURNAMES:
            pool.append(f"{g} {s}")
    rng.shuffle(pool)
    actor_name = dict(id_name)
    it = iter(pool)
    for a in range(w.next_actor):
        if a not in actor_name:
            actor_name[a] = next(it)
    noise_pool = list(it)

    records = []
    for year, authors, kind in w.papers:
        order = list(authors)
        rng.shuffle(order)
        records.append({"year": year, "title": title(rng), "authors": [actor_name[a] for a in order]})

    phrase_forms = ["Keynote: {n} on {t}", "Interview with {n} about {t}", "{t}: lecture notes by {n}",
                    "Panel on {t} chaired by {n}"]
    for i in range(n_seeds):
        name = names[i]
        toks = name.split()
        for _ in range(hcq[i] - npapers[i]):
            t = " ".join(rng.sample(TOPICS, 2))
            records.append({"year": rng.choice(YEARS), "title": rng.choice(phrase_forms).format(n=name, t=t),
                            "authors": rng.sample(noise_pool, rng.randint(1, 2))})
        for _ in range(hcb[i] - hcq[i]):
            t = " ".join(rng.sample(TOPICS, 3))
            rev = f"{toks[-1]}, {' '.join(toks[:-1])}"
            records.append({"year": rng.choice(YEARS), "title": f"Remembering {rev}: {t}",
                            "authors": rng.sample(noise_pool, rng.randint(1, 2))})

    records.sort(key=lambda r: r["year"])
    OUT.mkdir(exist_ok=True)
    with open(OUT / "corpus.jsonl", "w", encoding="utf-8") as f:
        for k, r in enumerate(records):
            rec = {"id": f"rec-{k + 1:05d}", "year": r["year"], "title": r["title"], "authors": r["authors"]}
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")
    with open(OUT / "seeds.tsv", "w", encoding="utf-8") as f:
        for i, n in enumerate(names):
            f.write(f"{n}\t{'pr' if al[i] else 'ap'}\n")
    with open(OUT / "expected_factors.csv", "w", encoding="utf-8") as f:
        f.write("seed,category,papers,phrase_hits,bag_hits\n")
        for i, n in enumerate(names):
            f.write(f"{n},{'pr' if al[i] else 'ap'},{npapers[i]},{hcq[i]},{hcb[i]}\n")
    print(f"{len(records)} records", file=sys.stderr)


if __name__ == "__main__":
    main()
