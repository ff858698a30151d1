"""Brute-force reference computations, independent of the library code paths."""


def sieve(gens, bound):
    """Membership flags for 0..bound by the textbook coin-problem recurrence."""
    member = [False] * (bound + 1)
    member[0] = True
    for n in range(1, bound + 1):
        member[n] = any(g <= n and member[n - g] for g in gens)
    return member


def gaps(gens, bound=None):
    if bound is None:
        bound = 4 * min(gens) * max(gens) + 1
    member = sieve(gens, bound)
    return [n for n in range(bound + 1) if not member[n]]


def closure_by_sums(gens, bound):
    """All sums of generators up to ``bound``, grown by repeated pairwise addition."""
    members = {0}
    frontier = {0}
    while frontier:
        new = {a + g for a in frontier for g in gens if a + g <= bound} - members
        members |= new
        frontier = new
    return members
