"""Connected partitions and the bond lattice weight

A connected partition of a vertex subset U of a host graph splits U into
blocks that each induce a connected subgraph. Its image G[pi] is the
disjoint union of the induced blocks; omega(H, G) counts the pairs
(pi, U) whose image is isomorphic to H.

Partitions are generated by deciding the fate of the least undecided vertex:
it is left out of U (non-spanning only) or it opens a block grown as a
connected set among the remaining undecided vertices. Every (pi, U) is
produced exactly once. The restricted-growth-string variant enumerates set
partitions blindly and filters them; it is kept as an oracle.

Omega profiles are memoized per host certificate like the subgraph profiles;
clear_profiles() drops them along with the canonical component cache.
"""
import collections
import itertools

from scipy.special import comb

from posetforge.base.graph import Graph
from posetforge.graphs.canonical import (canonical_form, certificate,
                                         clear_canonical_cache)

_OMEGA_PROFILES = {}


class PartialConnectedPartition(object):

    """A connected partition pi of a vertex subset U.

    Parameters
    ----------
    blocks : iterable of iterable of int
        Pairwise disjoint, non-empty blocks.

    Attributes
    ----------
    U : frozenset of int
        Union of the blocks.

    blocks : tuple of frozenset
        Blocks ordered by their least vertex.
    """

    __slots__ = ('U', 'blocks')

    def __init__(self, blocks):
        self.blocks = tuple(sorted((frozenset(b) for b in blocks), key=min))
        self.U = frozenset().union(*self.blocks) if self.blocks else frozenset()

    def __eq__(self, other):
        return (isinstance(other, PartialConnectedPartition)
                and self.blocks == other.blocks)

    def __hash__(self):
        return hash(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return "PartialConnectedPartition(%s)" % (
            [sorted(b) for b in self.blocks], )

    def is_connected_in(self, host):
        """True iff every block induces a connected subgraph of host."""
        return all(host.induced_subgraph(b).is_connected() for b in self.blocks)


class PartitionImage(object):

    """The image G[pi] of a connected partition.

    Attributes
    ----------
    host : Graph

    partition : PartialConnectedPartition

    image : Graph
        Disjoint union of host[X] over the blocks X, on the vertices of U
        relabeled in increasing order.
    """

    __slots__ = ('host', 'partition', 'image')

    def __init__(self, host, partition):
        self.host = host
        self.partition = partition
        vertices = sorted(partition.U)
        index = {u: i for i, u in enumerate(vertices)}
        block_of = {u: i for i, b in enumerate(partition.blocks) for u in b}
        self.image = Graph(len(vertices),
                           [(index[u], index[v]) for u, v in host.edges
                            if u in block_of and v in block_of
                            and block_of[u] == block_of[v]])


def partition_image(host, partition):
    """Return the image graph G[pi]."""
    return PartitionImage(host, partition).image


def connected_sets(g, v, allowed):
    """Enumerate the connected vertex sets containing v.

    Parameters
    ----------
    g : Graph

    v : int
        The seed vertex.

    allowed : set of int
        Vertices other than v that may join.

    Yields
    ------
    block : frozenset of int
        Each connected set containing v inside allowed | {v}, exactly once.
    """
    allowed = set(allowed)
    neighbors = [set(g.neighbors(u)) for u in range(g.n)]

    def grow(block, candidates, excluded):
        yield frozenset(block)
        candidates = sorted(candidates)
        for i, w in enumerate(candidates):
            skipped = excluded | set(candidates[:i])
            grown = block | {w}
            frontier = (set(candidates[i + 1:]) |
                        (neighbors[w] & allowed)) - grown - skipped
            for found in grow(grown, frontier, skipped):
                yield found

    for block in grow({v}, neighbors[v] & allowed, set()):
        yield block


def enumerate_connected_partitions(g, spanning):
    """Enumerate connected partitions of g.

    Parameters
    ----------
    g : Graph

    spanning : bool
        If True, yield exactly the connected partitions of V(g); otherwise
        yield every (pi, U) over all U, including the empty partition of the
        empty set.

    Yields
    ------
    partition : PartialConnectedPartition
    """
    def decide(undecided, blocks):
        if not undecided:
            yield PartialConnectedPartition(blocks)
            return
        v = undecided[0]
        rest = set(undecided[1:])
        if not spanning:
            for found in decide(undecided[1:], blocks):
                yield found
        for block in connected_sets(g, v, rest):
            remaining = tuple(u for u in undecided[1:] if u not in block)
            for found in decide(remaining, blocks + [block]):
                yield found

    for partition in decide(tuple(range(g.n)), []):
        yield partition


def _restricted_growth_strings(size):
    """All restricted growth strings of the given length."""
    if size == 0:
        yield ()
        return
    def extend(prefix, top):
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for value in range(top + 2):
            for found in extend(prefix + [value], max(top, value)):
                yield found
    for found in extend([0], 0):
        yield found


def enumerate_connected_partitions_rgs(g, spanning):
    """Brute-force oracle for :py:func:`enumerate_connected_partitions`.

    Every set partition of every U (or of V(g) when spanning) is generated by
    restricted growth strings and kept when all blocks are connected.
    """
    subsets = ([tuple(range(g.n))] if spanning else
               [s for r in range(g.n + 1)
                for s in itertools.combinations(range(g.n), r)])
    for subset in subsets:
        for rgs in _restricted_growth_strings(len(subset)):
            blocks = collections.defaultdict(list)
            for vertex, label in zip(subset, rgs):
                blocks[label].append(vertex)
            partition = PartialConnectedPartition(blocks.values())
            if partition.is_connected_in(g):
                yield partition


def block_families(g):
    """Enumerate families of disjoint connected blocks of size >= 2.

    These are the connected partitions with singleton blocks forgotten; the
    image core of a family is the union of the blocks' induced subgraphs.

    Yields
    ------
    blocks : list of frozenset
    """
    def decide(undecided, blocks):
        if not undecided:
            yield blocks
            return
        v = undecided[0]
        rest = set(undecided[1:])
        for found in decide(undecided[1:], blocks):
            yield found
        for block in connected_sets(g, v, rest):
            if len(block) < 2:
                continue
            remaining = tuple(u for u in undecided[1:] if u not in block)
            for found in decide(remaining, blocks + [block]):
                yield found

    for blocks in decide(tuple(range(g.n)), []):
        yield blocks


def family_core(g, blocks):
    """Image core of a family of blocks: host edges internal to a block."""
    block_of = {u: i for i, b in enumerate(blocks) for u in b}
    return g.subgraph_on_edges([(u, v) for u, v in g.sorted_edges()
                                if u in block_of and v in block_of
                                and block_of[u] == block_of[v]])


def _omega_classes(g):
    cert = certificate(g)
    found = _OMEGA_PROFILES.get(cert)
    if found is None:
        profile = collections.Counter()
        representatives = {}
        for blocks in block_families(g):
            core = family_core(g, blocks)
            form = canonical_form(core)
            profile[form.cert] += 1
            if form.cert not in representatives:
                representatives[form.cert] = core.relabel(form.order)
        found = _OMEGA_PROFILES.setdefault(cert, (profile, representatives))
    return found


def omega_profile(g):
    """Count partition-image cores of g.

    Returns
    -------
    profile : collections.Counter
        Maps the certificate of a core H to the number of (pi, U) of g whose
        image is exactly H (no singleton blocks). The null graph is counted
        once, for the empty family.
    """
    return _omega_classes(g)[0]


def omega_classes(g):
    """Canonical representative of every partition-image core of g."""
    return _omega_classes(g)[1]


def count_omega(h, g):
    """Return omega(h, g), the number of (pi, U) of g with g[pi] isomorphic to h.

    Isolated vertices of h are singleton blocks: a family of non-singleton
    blocks whose image is the core of h extends to such a pair in
    C(v(g) - v(core h), #isolated(h)) ways. On cores this is exactly the
    number of families whose image is h.

    Parameters
    ----------
    h, g : Graph

    Returns
    -------
    count : int
    """
    core = h.strip_isolated()
    isolated = h.n - core.n
    families = omega_profile(g)[certificate(core)]
    if not families:
        return 0
    return families * int(comb(g.n - core.n, isolated, exact=True))


def count_omega_spanning(h, g):
    """Number of connected partitions of V(g) whose image is isomorphic to h.

    This is the bond lattice weight between spanning graphs; it enumerates
    the spanning partitions directly and serves as the oracle for the
    core-based bookkeeping used by :py:func:`count_omega`.
    """
    if h.n != g.n:
        return 0
    target = certificate(h)
    return sum(1 for pi in enumerate_connected_partitions(g, spanning=True)
               if certificate(partition_image(g, pi)) == target)


def clear_profiles():
    """Drop memoized omega profiles."""
    _OMEGA_PROFILES.clear()
    clear_canonical_cache()
