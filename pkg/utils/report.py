#!/usr/bin/env python3
"""
Check records and report rendering shared by the CLI and the web API
"""

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ''

    @property
    def marker(self) -> str:
        return 'PASS' if self.passed else 'FAIL'


@dataclass
class Report:
    title: str
    checks: List[Check] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, passed: bool, detail: str = '') -> Check:
        check = Check(name, bool(passed), detail)
        self.checks.append(check)
        return check

    def check(self, name: str, predicate, *args, **kwargs) -> Check:
        """Record predicate(*args) as a check; an exception counts as a failure."""
        try:
            return self.add(name, predicate(*args, **kwargs))
        except (ValueError, ArithmeticError) as e:
            return self.add(name, False, f"{type(e).__name__}: {e}")

    def extend(self, other: "Report"):
        self.checks.extend(other.checks)
        self.data.update(other.data)

    def guarded(self, name: str, fn, *args, **kwargs) -> Optional[Any]:
        """Run fn; a raised exception is recorded as a failed check instead of escaping."""
        try:
            return fn(*args, **kwargs)
        except (ValueError, ArithmeticError) as e:
            self.add(name, False, f"{type(e).__name__}: {e}")
            return None

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_text(self) -> str:
        lines = [self.title, '=' * max(len(self.title), 40)]
        for c in self.checks:
            mark = '✓' if c.passed else '❌'
            lines.append(f"{mark} {c.marker}  {c.name}" + (f"  ({c.detail})" if c.detail else ''))
        passed = sum(c.passed for c in self.checks)
        lines.append(f"{passed}/{len(self.checks)} checks passed")
        return '\n'.join(lines)

    def to_json(self) -> dict:
        return {'title': self.title,
                'passed': self.all_passed,
                'checks': [asdict(c) for c in self.checks],
                'data': self.data}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)
