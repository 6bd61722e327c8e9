"""Independent reference implementations used to freeze expected values.

Nothing here imports the numeric routines under test: spectra come from
numpy.linalg.eigvalsh on hand-built matrices, counts from brute force.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np


def lap(n, edges, signless=False):
    a = np.zeros((n, n))
    for u, v in edges:
        a[u, v] = a[v, u] = 1.0
    d = np.diag(a.sum(axis=1))
    return d + a if signless else d - a


def eigs(n, edges, signless=False):
    return np.sort(np.linalg.eigvalsh(lap(n, edges, signless)))


def density(n, edges, signless=False):
    return eigs(n, edges, signless) / (2 * len(edges))


def moment(p, q):
    p = p[p > 0]
    return float(np.sum(p ** q))


def sm(p, q, r):
    return (moment(p, q) ** ((1 - r) / (1 - q)) - 1) / (1 - r)


def renyi_bits(p, q):
    return math.log2(moment(p, q)) / (1 - q)


def tsallis(p, q):
    return (moment(p, q) - 1) / (1 - q)


def vn_bits(p):
    p = p[p > 0]
    return float(-np.sum(p * np.log2(p)))


def n_components(n, edges):
    seen, comps = set(), 0
    adj = {i: [] for i in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for s in range(n):
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return comps


def spanning_trees_brute(n, edges):
    """Count (n-1)-edge subsets that connect all vertices."""
    return sum(1 for sub in combinations(edges, n - 1) if n_components(n, sub) == 1)


def subgraph_sum_brute(n, edges, base=4):
    total = 0
    for k in range(len(edges) + 1):
        for sub in combinations(edges, k):
            total += base ** n_components(n, sub)
    return total


def clique_brute(n, edges):
    es = set(map(tuple, edges))
    for k in range(n, 0, -1):
        for sub in combinations(range(n), k):
            if all((a, b) in es for a, b in combinations(sub, 2)):
                return k
    return 0


def product_edges(n1, e1, n2, e2, kind):
    """Product graphs straight from the adjacency definitions."""
    a1 = np.zeros((n1, n1), bool)
    a2 = np.zeros((n2, n2), bool)
    for u, v in e1:
        a1[u, v] = a1[v, u] = True
    for u, v in e2:
        a2[u, v] = a2[v, u] = True
    if kind == "corona":
        n = n1 + n1 * n2
        out = set(e1)
        for i in range(n1):
            off = n1 + i * n2
            out |= {(u + off, v + off) for u, v in e2}
            out |= {(i, off + j) for j in range(n2)}
        return n, sorted(out)
    out = []
    for (i, j), (k, l) in combinations([(i, j) for i in range(n1) for j in range(n2)], 2):
        if kind == "cartesian":
            adj = (i == k and a2[j, l]) or (j == l and a1[i, k])
        elif kind == "kronecker":
            adj = a1[i, k] and a2[j, l]
        elif kind == "strong":
            adj = (i == k and a2[j, l]) or (j == l and a1[i, k]) or (a1[i, k] and a2[j, l])
        else:  # lexicographic
            adj = a1[i, k] or (i == k and a2[j, l])
        if adj:
            out.append((i * n2 + j, k * n2 + l))
    return n1 * n2, out
