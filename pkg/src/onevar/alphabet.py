"""Letter table: original letters, fresh pair/block letters and their grammar.

Every letter ever created gets a permanent *global* id that indexes the
expansion grammar.  Equations are written over *current* ids, which are
renumbered to a consecutive range at the end of each phase.
"""
from dataclasses import dataclass, field


class ExpansionTooLong(ValueError):
    def __init__(self, weight, limit):
        super().__init__(f"expansion exceeds limit: weight {weight} > {limit}")
        self.weight = weight
        self.limit = limit


@dataclass(frozen=True)
class Original:
    char: str


@dataclass(frozen=True)
class Pair:
    left: int
    right: int


@dataclass(frozen=True)
class Block:
    base: int
    count: int


class Alphabet:
    """Grammar of all letters plus the current-id mapping of one phase."""

    def __init__(self):
        self.rules = []  # global id -> Original | Pair | Block
        self.weights = []  # global id -> expansion length
        self._by_char = {}
        self.cur2glob = []  # current id -> global id
        self._pair_memo = {}
        self._block_memo = {}
        self.block_letters = set()  # current ids created by block compression this phase

    # -- construction -------------------------------------------------
    def _new_global(self, rule, weight):
        self.rules.append(rule)
        self.weights.append(weight)
        return len(self.rules) - 1

    def _new_current(self, gid):
        self.cur2glob.append(gid)
        return len(self.cur2glob) - 1

    def intern(self, char):
        """Current id of an original letter (created on first use)."""
        cid = self._by_char.get(char)
        if cid is None:
            cid = self._new_current(self._new_global(Original(char), 1))
            self._by_char[char] = cid
        return cid

    def fresh_pair_letter(self, a, b):
        if a == b:
            raise ValueError("block, not pair")
        key = (a, b)
        cid = self._pair_memo.get(key)
        if cid is None:
            ga, gb = self.cur2glob[a], self.cur2glob[b]
            gid = self._new_global(Pair(ga, gb), self.weights[ga] + self.weights[gb])
            cid = self._pair_memo[key] = self._new_current(gid)
        return cid

    def fresh_block_letter(self, a, count):
        if count < 2:
            raise ValueError(f"block length must be at least 2, got {count}")
        key = (a, count)
        cid = self._block_memo.get(key)
        if cid is None:
            ga = self.cur2glob[a]
            gid = self._new_global(Block(ga, count), count * self.weights[ga])
            cid = self._block_memo[key] = self._new_current(gid)
            self.block_letters.add(cid)
        return cid

    # -- queries --------------------------------------------------------
    def weight(self, cid):
        return self.weights[self.cur2glob[cid]]

    def glob(self, cid):
        return self.cur2glob[cid]

    def expand_global(self, gid, limit=None):
        w = self.weights[gid]
        if limit is not None and w > limit:
            raise ExpansionTooLong(w, limit)
        out = []
        stack = [gid]
        while stack:
            g = stack.pop()
            rule = self.rules[g]
            if isinstance(rule, Original):
                out.append(rule.char)
            elif isinstance(rule, Pair):
                stack.append(rule.right)
                stack.append(rule.left)
            else:
                stack.extend([rule.base] * rule.count)
        return "".join(out)

    def expand(self, cid, limit=None):
        return self.expand_global(self.cur2glob[cid], limit)

    # -- phase bookkeeping ----------------------------------------------
    def renumber(self, words):
        """Re-identify the letters occurring in ``words`` with 0..m-1.

        ``words`` are mutable letter lists (each distinct list given once);
        they are rewritten in place.  Returns the old->new mapping.
        """
        present = set()
        for w in words:
            present.update(w)
        old_ids = sorted(present)
        mapping = {old: new for new, old in enumerate(old_ids)}
        for w in words:
            w[:] = [mapping[c] for c in w]
        self.cur2glob = [self.cur2glob[old] for old in old_ids]
        self._by_char = {ch: mapping[c] for ch, c in self._by_char.items() if c in mapping}
        self._pair_memo.clear()
        self._block_memo.clear()
        self.block_letters.clear()
        return mapping

    def start_phase(self):
        self._pair_memo.clear()
        self._block_memo.clear()
        self.block_letters.clear()


@dataclass
class PoppedRecord:
    """Letters popped off X so far, as (global id, count) runs.

    ``prefix`` is outermost first, ``suffix`` innermost first, so the
    original solution is ``prefix + current + suffix``.
    """

    prefix: list = field(default_factory=list)
    suffix: list = field(default_factory=list)
    prefix_weight: int = 0
    suffix_weight: int = 0

    def pop_left(self, gid, count, weight):
        self.prefix.append((gid, count))
        self.prefix_weight += count * weight

    def pop_right(self, gid, count, weight):
        self.suffix.insert(0, (gid, count))
        self.suffix_weight += count * weight

    def snapshot(self):
        return tuple(self.prefix), tuple(self.suffix), self.prefix_weight, self.suffix_weight
