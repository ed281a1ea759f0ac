"""
Pass/fail reports shared by the relation-law and property verifiers.

A report serializes to one line per law:

    LAW no_induced_p4 PASS
    LAW no_long_hole FAIL a b c d e
    LAW at_free SKIPPED find_asteroidal_triple supports at most 16 (got 20)
"""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = 'PASS'
FAIL = 'FAIL'
SKIPPED = 'SKIPPED'


def _format_witness(witness):
    if isinstance(witness, (tuple, list, set, frozenset)):
        items = sorted(witness) if isinstance(witness, (set, frozenset)) else witness
        return ' '.join(_format_witness(item) for item in items)
    return str(witness)


@dataclass
class LawResult:
    name: str
    status: str
    witnesses: list = field(default_factory=list)
    note: str = ''

    def line(self):
        parts = ['LAW', self.name, self.status]
        if self.status == FAIL and self.witnesses:
            # The first counterexample is enough on the summary line
            parts.append(_format_witness(self.witnesses[0]))
        elif self.note:
            parts.append(self.note)
        return ' '.join(parts)


@dataclass
class LawReport:
    results: list = field(default_factory=list)

    def add(self, name, witnesses):
        """Record a law from the list of its violations (empty list = PASS)."""
        witnesses = list(witnesses)
        self.results.append(LawResult(name, FAIL if witnesses else PASS, witnesses))

    def skip(self, name, note):
        self.results.append(LawResult(name, SKIPPED, note=note))

    def extend(self, other):
        self.results.extend(other.results)
        return self

    @property
    def passed(self):
        """True iff no law failed (skipped laws do not fail a report)."""
        return all(result.status != FAIL for result in self.results)

    @property
    def failures(self):
        return [result for result in self.results if result.status == FAIL]

    def status_of(self, name):
        for result in self.results:
            if result.name == name:
                return result.status
        raise KeyError(name)

    def lines(self):
        return [result.line() for result in self.results]

    def __str__(self):
        return '\n'.join(self.lines())
