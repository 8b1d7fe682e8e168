"""Exhaustive search for minimally k-connected graphs with prescribed |V_k|.

For given (n, m, k) and each v <= --max-vk, every degree sequence with v
entries equal to k, the rest in k+1..n-1, and sum 2m is realized in all
labeled ways (degrees fixed per vertex, so every isomorphism class is
covered) and each realization is tested with the bitmask oracle. Used to
show that (n, m, k) = (9, 16, 3) has no minimally 3-connected graph with
|V_3| = 5 although the tight bound is 5.

    python3 tools/degree_sequence_search.py --n 9 --m 16 --k 3 --max-vk 6
"""

import argparse
import time
from itertools import combinations, combinations_with_replacement

from minconn.bounds import tight_lower
from minconn.graph_io import to_graph6
from minconn.oracle import _minimally_k_connected, _sets_up_to, from_masks


def sequences(n, m, k, vk):
    for rest in combinations_with_replacement(range(n - 1, k, -1), n - vk):
        if sum(rest) + k * vk == 2 * m:
            yield list(rest) + [k] * vk


def realize(degs, k, limit=1):
    n = len(degs)
    adj, rem, sets, found = [0] * n, list(degs), _sets_up_to(n, k - 1), []

    def rec(v):
        if len(found) >= limit:
            return
        if v == n:
            if _minimally_k_connected(adj, n, k, sets):
                found.append(tuple(adj))
            return
        cands = [w for w in range(v + 1, n) if rem[w] > 0]
        need = rem[v]
        if need > len(cands):
            return
        for chosen in combinations(cands, need):
            for w in chosen:
                rem[w] -= 1
                adj[w] |= 1 << v
                adj[v] |= 1 << w
            rem[v] = 0
            if all(rem[w] <= n - v - 2 for w in range(v + 1, n)):
                rec(v + 1)
            rem[v] = need
            for w in chosen:
                rem[w] += 1
                adj[w] ^= 1 << v
                adj[v] ^= 1 << w

    rec(0)
    return found


def main():
    p = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-vk", type=int, required=True)
    a = p.parse_args()
    print(f"tight_lower({a.m}, {a.n}, {a.k}) = {tight_lower(a.m, a.n, a.k)}")
    for vk in range(a.k + 1, a.max_vk + 1):
        for degs in sequences(a.n, a.m, a.k, vk):
            t = time.perf_counter()
            found = realize(degs, a.k)
            hit = to_graph6(from_masks(found[0])).strip() if found else "none"
            print(f"|V_k|={vk} degrees={degs}: {hit} ({time.perf_counter() - t:.1f}s)", flush=True)


if __name__ == "__main__":
    main()
