"""Axiom reports: per-check verdicts with counterexample witnesses.

A report is a list of (axiom id, pass/fail, witness) entries plus a dict of
verified flags (triangular, cotriangular, ...).  Witnesses name the basis
tuple on which an identity first failed, so a failing report doubles as a
debugging instrument.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    axiom: str
    passed: bool
    witness: tuple = None

    def as_tuple(self):
        return (self.axiom, "pass" if self.passed else "fail", self.witness)


@dataclass
class AxiomReport:
    checks: list = field(default_factory=list)
    flags: dict = field(default_factory=dict)

    def add(self, axiom, passed, witness=None):
        self.checks.append(Check(axiom, bool(passed), witness))
        return self

    def set_flag(self, name, value):
        self.flags[name] = value
        return self

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.axiom, c.passed, c.witness))
        for k, v in other.flags.items():
            self.flags[prefix + k] = v
        return self

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failed(self):
        return [c for c in self.checks if not c.passed]

    def check(self, axiom):
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)

    def passed(self, axiom):
        return self.check(axiom).passed

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    def lines(self):
        out = []
        for c in self.checks:
            line = "%-28s %s" % (c.axiom, "pass" if c.passed else "FAIL")
            if c.witness is not None and not c.passed:
                line += "  witness=%r" % (c.witness,)
            out.append(line)
        for k in sorted(self.flags):
            out.append("%-28s %s" % ("[flag] " + k, self.flags[k]))
        return out

    def __str__(self):
        return "\n".join(self.lines())


def matrices_equal_report(report, axiom, lhs, rhs, dims_in, names_in=None):
    """Record lhs == rhs; on failure witness the first differing input basis tuple."""
    if lhs.rows != rhs.rows or lhs.cols != rhs.cols:
        report.add(axiom, False, ("shape", (lhs.rows, lhs.cols), (rhs.rows, rhs.cols)))
        return report
    if lhs == rhs:
        report.add(axiom, True)
        return report
    from .linalg import unflat_index
    witness = None
    for c in range(lhs.cols):
        for r in range(lhs.rows):
            if lhs.data[r][c] != rhs.data[r][c]:
                idxs = unflat_index(c, dims_in)
                if names_in is not None:
                    witness = tuple(names[i] for names, i in zip(names_in, idxs))
                else:
                    witness = idxs
                break
        if witness is not None:
            break
    report.add(axiom, False, witness)
    return report
