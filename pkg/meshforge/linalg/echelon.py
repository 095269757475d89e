"""Sparse semi-echelon bases over exact rationals."""

from gmpy2 import mpq


class EchelonBasis:
    """
    A subspace of a sparse vector space, stored as rows in semi-echelon form.

    Vectors are dicts mapping coordinate labels to nonzero ``mpq`` values.
    Every stored row is normalized so that its pivot, the largest label of the
    row under `key`, has coefficient 1, and no two rows share a pivot. Any
    nonzero combination of rows therefore still contains the largest pivot it
    uses, which makes :meth:`reduce` a normal form.

    Parameters
    ----------
    key : callable, optional
        Sort key on coordinate labels. Defaults to the labels themselves.
    """

    __slots__ = ["_rows", "_key"]

    def __init__(self, key=None):
        self._rows = {}
        self._key = key if key is not None else (lambda label: label)

    def __len__(self):
        return len(self._rows)

    def __contains__(self, vector):
        return not self.reduce(vector)

    def __repr__(self):
        return f"<{self.__class__.__name__} rank={len(self)}>"

    @property
    def pivots(self):
        """Set of labels used as pivots."""
        return set(self._rows)

    def rows(self):
        """Stored rows, ordered by pivot."""
        return [dict(self._rows[p]) for p in sorted(self._rows, key=self._key)]

    def reduce(self, vector):
        """
        Remainder of `vector` modulo the span, supported off the pivots.

        Parameters
        ----------
        vector : dict
            Sparse vector, label -> rational.

        Returns
        -------
        dict
            Sparse vector with no pivot labels; empty iff `vector` lies in the span.
        """
        rows = self._rows
        key = self._key
        v = {label: mpq(c) for label, c in vector.items() if c != 0}
        while True:
            hits = [label for label in v if label in rows]
            if not hits:
                return v
            pivot = max(hits, key=key)
            factor = v[pivot]
            for label, c in rows[pivot].items():
                new = v.get(label, 0) - factor * c
                if new == 0:
                    v.pop(label, None)
                else:
                    v[label] = new

    def insert(self, vector):
        """
        Add `vector` to the span.

        Returns
        -------
        bool
            True iff the rank increased.
        """
        remainder = self.reduce(vector)
        if not remainder:
            return False
        pivot = max(remainder, key=self._key)
        scale = remainder[pivot]
        self._rows[pivot] = {label: c / scale for label, c in remainder.items()}
        return True

    def extend(self, vectors):
        """Insert every vector; returns how many increased the rank."""
        return sum(1 for v in vectors if self.insert(v))
