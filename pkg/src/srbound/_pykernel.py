"""Pure Python fraction-free simplex tableau.

Entries are Python integers; the true tableau is ``rows / denom``.  After
every pivot ``denom`` equals the determinant of the current basis, so all
updates are exact integer divisions (Bareiss / Edmonds pivoting).
"""


class PyTableau:
    __slots__ = ("rows", "denom")

    def __init__(self, rows, denom=1):
        self.rows = [list(r) for r in rows]
        self.denom = denom

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def get(self, i, j):
        return self.rows[i][j]

    def row(self, i):
        return list(self.rows[i])

    def column(self, j):
        return [r[j] for r in self.rows]

    def tolists(self):
        return [list(r) for r in self.rows]

    def pivot(self, r, s):
        rows = self.rows
        pr = rows[r]
        p = pr[s]
        d = self.denom
        for i, row in enumerate(rows):
            if i == r:
                continue
            f = row[s]
            if f == 0:
                if p != d:
                    rows[i] = [x * p // d for x in row]
            else:
                rows[i] = [(x * p - f * y) // d for x, y in zip(row, pr)]
        if p < 0:
            self.rows = [[-x for x in row] for row in rows]
            p = -p
        self.denom = p
        return True
