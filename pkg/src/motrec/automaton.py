"""Suffix automaton over symbol-index words.

Transitions live in one flat list indexed by ``state * sigma + symbol``; for
the small alphabets used here this is markedly faster in CPython than a dict
per state.  Construction is the standard online algorithm (Blumer et al.).
"""

from __future__ import annotations


class SuffixAutomaton:
    def __init__(self, data: bytes, sigma: int) -> None:
        if sigma < 1:
            raise ValueError("sigma must be positive")
        self.sigma = sigma
        self.text_length = len(data)
        cap = 2 * len(data) + 2
        nxt = [-1] * (cap * sigma)
        link = [-1] * cap
        length = [0] * cap
        size = 1
        last = 0
        for c in data:
            cur = size
            size += 1
            length[cur] = length[last] + 1
            p = last
            while p != -1 and nxt[p * sigma + c] == -1:
                nxt[p * sigma + c] = cur
                p = link[p]
            if p == -1:
                link[cur] = 0
            else:
                q = nxt[p * sigma + c]
                if length[p] + 1 == length[q]:
                    link[cur] = q
                else:
                    clone = size
                    size += 1
                    length[clone] = length[p] + 1
                    link[clone] = link[q]
                    base = q * sigma
                    nxt[clone * sigma:clone * sigma + sigma] = nxt[base:base + sigma]
                    while p != -1 and nxt[p * sigma + c] == q:
                        nxt[p * sigma + c] = clone
                        p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur
        self.size = size
        self.last = last
        self.link = link[:size]
        self.length = length[:size]
        self._next = nxt[:size * sigma]

    def transition(self, state: int, symbol: int) -> int:
        return self._next[state * self.sigma + symbol]

    def out_degree(self, state: int) -> int:
        row = self._next[state * self.sigma:(state + 1) * self.sigma]
        return self.sigma - row.count(-1)

    def counts_by_length(self, n_max: int | None = None) -> list[int]:
        """Distinct factor counts ``P[0..n_max]`` (``P[0] = 1``).

        A state holds exactly the factors with lengths in
        ``(length[link], length]``, so a difference array over those intervals
        counts every factor once.
        """
        top = self.text_length if n_max is None else min(n_max, self.text_length)
        diff = [0] * (self.text_length + 2)
        length, link = self.length, self.link
        for s in range(1, self.size):
            diff[length[link[s]] + 1] += 1
            diff[length[s] + 1] -= 1
        counts = [1]
        acc = 0
        for n in range(1, top + 1):
            acc += diff[n]
            counts.append(acc)
        if n_max is not None and n_max > top:
            counts.extend([0] * (n_max - top))
        return counts

    def extension_sums(self, n_max: int) -> tuple[list[int], list[int]]:
        """Per-length sums of ``(right extensions - 1)`` and ``(left extensions - 1)``.

        Only extensions inside the word count.  Factors with no extension on a
        side (the suffix or prefix occurring only once) are left out of that
        side's sum.  All factors of one state share their right extensions,
        which are the state's transitions.  Every factor shorter than the
        state's longest has a single left extension; the longest one extends
        left once per suffix-link child.
        """
        length, link = self.length, self.link
        children = [0] * self.size
        for s in range(1, self.size):
            children[link[s]] += 1
        diff = [0] * (n_max + 2)
        left = [0] * (n_max + 1)
        for s in range(1, self.size):
            lo = length[link[s]] + 1
            if lo > n_max:
                continue
            hi = min(length[s], n_max)
            deg = self.out_degree(s)
            if deg:
                diff[lo] += deg - 1
                diff[hi + 1] -= deg - 1
            if length[s] <= n_max and children[s]:
                left[length[s]] += children[s] - 1
        right = [0] * (n_max + 1)
        acc = 0
        for n in range(1, n_max + 1):
            acc += diff[n]
            right[n] = acc
        return right, left
