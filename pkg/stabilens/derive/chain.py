"""
Text form of derivation chains.

A chain is written root first, steps separated by ';', e.g.
``extension(q=2,m=4,n=63,k=6);lengthen;subcode``.
"""

import re
from typing import Any, Dict

from ..core.errors import MalformedCertificate
from ..core.types import DerivationRecord, Rule, ROOT_RULES
from .rules import lengthen, subcode
from .theorems import derive_from_theorem

_ROOT_PATTERN = re.compile(r'^([a-z-]+)\(q=(\d+),m=(\d+),n=(\d+),k=(\d+)\)$')
_STEPS = {Rule.LENGTHEN.value: lengthen, Rule.SUBCODE.value: subcode}


def format_chain(record: DerivationRecord) -> str:
    root = record.root
    if root.inputs is None:
        head = root.rule.value
    else:
        i = root.inputs
        head = f"{root.rule.value}(q={i.q},m={i.m},n={i.n},k={i.k})"
    return ';'.join([head] + [rule.value for rule in record.rule_path])


def replay_chain(text: str) -> DerivationRecord:
    """Rebuild a record by re-running every step of a serialized chain."""
    steps = [step.strip() for step in text.strip().split(';')]
    match = _ROOT_PATTERN.match(steps[0])
    if not match:
        raise MalformedCertificate(f"unparseable chain root: {steps[0]!r}")
    rule_name = match.group(1)
    q, m, n, k = (int(g) for g in match.groups()[1:])
    try:
        rule = Rule(rule_name)
    except ValueError:
        raise MalformedCertificate(f"unknown rule: {rule_name!r}")
    if rule not in ROOT_RULES:
        raise MalformedCertificate(f"{rule_name} cannot start a chain")

    record = derive_from_theorem(q, m, n, k)
    if rule == Rule.BEST_EXTENSION:
        record = DerivationRecord(params=record.params, rule=rule, inputs=record.inputs)
    elif rule != record.rule:
        raise MalformedCertificate(f"{rule_name} does not match m={m}")

    for step in steps[1:]:
        if step not in _STEPS:
            raise MalformedCertificate(f"unknown step: {step!r}")
        record = _STEPS[step](record)
    return record


def record_to_dict(record: DerivationRecord) -> Dict[str, Any]:
    p = record.params
    return {
        'q': p.q,
        'N': p.N,
        'K': p.K,
        'D': p.D,
        'rule': record.rule.value,
        'chain': format_chain(record)
    }


def record_from_dict(data: Dict[str, Any]) -> DerivationRecord:
    record = replay_chain(data['chain'])
    claimed = tuple(data[key] for key in ('q', 'N', 'K', 'D'))
    if record.params.key != claimed:
        raise MalformedCertificate(f"chain yields {record.params}, record claims {claimed}")
    return record
