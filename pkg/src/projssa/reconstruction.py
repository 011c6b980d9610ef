"""Grouping of eigentriples and reconstruction of series components."""

import re

from .errors import (
    DuplicateGroupName,
    IndexOutOfRange,
    OverlappingGroups,
    SplitProjectionGroup,
    SSAError,
)
from .series import hankelize

RESIDUAL = "residual"


class Grouping:
    """Named, disjoint sets of 1-based eigentriple indices.

    Indices not covered by any group form an implicit trailing
    ``"residual"`` group when the grouping is resolved against a
    decomposition.
    """

    def __init__(self, groups):
        items = list(groups.items()) if hasattr(groups, "items") else list(groups)
        names = [name for name, _ in items]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise DuplicateGroupName(f"duplicate group names: {', '.join(dupes)}")
        seen = {}
        self.groups = {}
        for name, indices in items:
            if not name:
                raise SSAError("group names must be non-empty")
            idx = sorted({int(i) for i in indices})
            for i in idx:
                if i < 1:
                    raise IndexOutOfRange(f"eigentriple index {i} in group {name!r} is below 1")
                if i in seen:
                    raise OverlappingGroups(
                        f"index {i} appears in groups {seen[i]!r} and {name!r}")
                seen[i] = name
            self.groups[name] = idx

    def __repr__(self):
        return f"Grouping({self.groups!r})"

    @classmethod
    def parse(cls, text):
        """Parse ``"trend=1,2;season=3-4"``; ``a-b`` is an inclusive range."""
        items = []
        for part in filter(None, (s.strip() for s in text.split(";"))):
            name, sep, spec = part.partition("=")
            name = name.strip()
            if not sep or not name:
                raise SSAError(f"cannot parse group {part!r}; expected name=indices")
            items.append((name, _parse_indices(spec)))
        if not items:
            raise SSAError("empty group specification")
        return cls(items)

    @classmethod
    def elementary(cls, decomposition):
        return cls({f"F{i}": [i] for i in range(1, len(decomposition) + 1)})

    def resolve(self, decomposition):
        """Return the full list of ``(name, indices)`` for ``decomposition``.

        Checks index ranges and that the projection triples ``1..q+p`` are
        not split across groups.
        """
        d = len(decomposition)
        for name, idx in self.groups.items():
            if idx and idx[-1] > d:
                raise IndexOutOfRange(
                    f"group {name!r} refers to ET{idx[-1]} but the decomposition has {d} triples")
        covered = {i for idx in self.groups.values() for i in idx}
        rest = [i for i in range(1, d + 1) if i not in covered]
        resolved = list(self.groups.items())
        if rest:
            if RESIDUAL in self.groups:
                raise DuplicateGroupName(
                    f"group name {RESIDUAL!r} is reserved for uncovered indices {rest}")
            resolved.append((RESIDUAL, rest))
        special = set(range(1, decomposition.n_special + 1))
        if special:
            owners = [name for name, idx in resolved if special & set(idx)]
            if len(owners) > 1:
                raise SplitProjectionGroup(
                    f"projection triples 1..{decomposition.n_special} are split "
                    f"across groups {', '.join(map(repr, owners))}")
        return resolved


def _parse_indices(spec):
    out = []
    for token in filter(None, (t.strip() for t in spec.split(","))):
        m = re.fullmatch(r"(\d+)\s*-\s*(\d+)", token)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if hi < lo:
                raise SSAError(f"empty index range {token!r}")
            out.extend(range(lo, hi + 1))
        elif token.isdigit():
            out.append(int(token))
        else:
            raise SSAError(f"cannot parse index {token!r}")
    return out


def reconstruct(decomposition, grouping):
    """Reconstructed series for each group, as an ordered ``{name: series}`` dict."""
    if not isinstance(grouping, Grouping):
        grouping = Grouping(grouping)
    return {
        name: hankelize(decomposition.grouped(idx))
        for name, idx in grouping.resolve(decomposition)
    }


def augment_trend_group(decomposition, extra=()):
    """Grouping whose ``"trend"`` group is the projection triples plus ``extra``.

    ``extra`` holds 1-based indices of SVD triples, e.g. ``{5, 8}`` to
    supplement a ProjSSA(1, 1) trend with ET5 and ET8.
    """
    special = decomposition.n_special
    extra = sorted({int(i) for i in extra})
    bad = [i for i in extra if i <= special]
    if bad:
        raise IndexOutOfRange(f"indices {bad} refer to projection triples, not SVD triples")
    for i in extra:
        if i > len(decomposition):
            raise IndexOutOfRange(
                f"ET{i} does not exist; the decomposition has {len(decomposition)} triples")
    return Grouping({"trend": list(range(1, special + 1)) + extra})


def reconstruct_trend(decomposition, extra=()):
    """Series reconstructed from the projection triples plus ``extra``."""
    return reconstruct(decomposition, augment_trend_group(decomposition, extra))["trend"]
