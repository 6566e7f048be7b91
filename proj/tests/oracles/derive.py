#!/usr/bin/env python3
# Copyright 2026 The nmr Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Brute-force reference values frozen into the C++ tests.

Worlds are dicts from atom to bool with Fraction weights; every quantity is
computed by summation, independently of the library.
"""

from fractions import Fraction as F
from itertools import product


def pr(worlds, f, given=lambda w: True):
    num = sum(wt for w, wt in worlds if f(w) and given(w))
    den = sum(wt for w, wt in worlds if given(w))
    return num / den


def unfair(n, f):
    ws = [({f"t{i}": False for i in range(n)}, 1 - f)]
    for j in range(n):
        ws.append(({f"t{i}": i == j for i in range(n)}, f / n))
    return ws


def preface(n, g, pg, pb):
    ws = []
    for c, *s in product([True, False], repeat=n + 1):
        p = pg if c else pb
        wt = g if c else 1 - g
        for b in s:
            wt *= p if b else 1 - p
        w = {"c": c}
        w.update({f"s{i}": b for i, b in enumerate(s)})
        ws.append((w, wt))
    return ws


def lotteryization(q, n):
    ws = [({f"p{i}": False for i in range(n)}, q)]
    for j in range(n):
        ws.append(({f"p{i}": i == j for i in range(n)}, (1 - q) / n))
    return ws


def korb(m, n, q):
    ws = []
    for i in range(m):
        ws.append((("p", i), (1 - q) / m))
    for j in range(n):
        ws.append((("q", j), q / n))
    return ws


def margins(ws, props):
    out = []
    for i, p in enumerate(props):
        others = [x for k, x in enumerate(props) if k != i]
        out.append(pr(ws, p, lambda w: all(o(w) for o in others)) - pr(ws, p))
    return out


def main():
    n = 5
    ws = unfair(n, F(99, 100))
    disj = lambda w: any(w[f"t{i}"] for i in range(n))
    h0 = lambda w: all(not w[f"t{i}"] for i in range(1, n))
    print("unfair rhs", pr(ws, disj))
    print("unfair lhs", pr(ws, disj, h0))
    print("unfair Pr(~t_i)", pr(ws, lambda w: not w["t0"]))
    print("unfair Pr(H_i)", pr(ws, h0))
    print("unfair margins(~t)", margins(ws, [lambda w, i=i: not w[f"t{i}"] for i in range(n)]))
    ws2 = unfair(2, F(99, 100))
    print("unfair n=2 lhs/rhs", pr(ws2, lambda w: w["t0"] or w["t1"], lambda w: not w["t1"]),
          pr(ws2, lambda w: w["t0"] or w["t1"]))

    for (n, g, pg, pb) in [(4, F(9, 10), F(19, 20), F(1, 2)), (8, F(9, 10), F(4, 5), F(1, 2))]:
        ws = preface(n, g, pg, pb)
        err = lambda w: any(not w[f"s{i}"] for i in range(n))
        h0 = lambda w: all(w[f"s{i}"] for i in range(1, n))
        print(f"preface n={n} rhs", pr(ws, err))
        print(f"preface n={n} lhs", pr(ws, err, h0))
        print(f"preface n={n} Pr(s_i)", pr(ws, lambda w: w["s0"]))
        print(f"preface n={n} Pr(H_i)", pr(ws, h0))
        print(f"preface n={n} margins", margins(ws, [lambda w, i=i: w[f"s{i}"] for i in range(n)]))
        # Relevance of the s_i given the error disjunction.
        ctx = [lambda w, i=i: w[f"s{i}"] for i in range(n)]
        m = []
        for i in range(n):
            others = lambda w, i=i: all(w[f"s{k}"] for k in range(n) if k != i)
            m.append(pr(ws, ctx[i], lambda w: others(w) and err(w)) - pr(ws, ctx[i], err))
        print(f"preface n={n} margins given error", m)

    for q, n in [(F(1, 10), 5), (F(1, 2), 2), (F(1, 10), 9), (F(1, 10), 10), (F(1, 1000), 5)]:
        ws = lotteryization(q, n)
        rest = lambda w: all(not w[f"p{k}"] for k in range(1, n))
        exact = pr(ws, lambda w: w["p0"], rest)
        paper = 1 - q / (q + F(1, n))
        print(f"lotteryization q={q} n={n} exact", exact, "paper", paper,
              "Pr(rest)", pr(ws, rest))

    def threshold(q, value):
        n = 2
        while value(q, n) >= F(1, 2):
            n += 1
        return n
    paper_v = lambda q, n: 1 - q / (q + F(1, n))
    exact_v = lambda q, n: 1 - q / (q + (1 - q) / n)
    for q in [F(1, 10), F(1, 4), F(1, 2), F(1, 100), F(1, 3)]:
        print(f"threshold q={q} paper", threshold(q, paper_v), "exact", threshold(q, exact_v))

    ws = korb(3, 3, F(1, 10))
    print("korb Pr(~p_i)", pr(ws, lambda w: w != ("p", 0)))
    print("korb Pr(~q_j)", pr(ws, lambda w: w != ("q", 0)))
    print("korb Pr(p)", pr(ws, lambda w: w[0] == "p"))

    # Fair lottery minimal inconsistent sets over {~t_i} given exactly-one.
    n = 5
    sets = []
    for mask in range(1, 1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        # exactly one ticket wins: inconsistent iff every ticket is claimed to lose
        if len(members) == n:
            sets.append(members)
    print("fair lottery MUS", sets)


if __name__ == "__main__":
    main()
