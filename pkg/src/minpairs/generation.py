"""Exhaustive template expansion and minimal-pair construction.

Expansion is a deterministic Cartesian product: iteration variables in
declaration order (outermost first), then slot entry choices left to right
in lexicon order.  Applying a template's contrast rule to each grammatical
realization yields one or more ungrammatical counterparts, each differing
at exactly the rule's token positions.  Two runs over the same grammar
produce byte-identical streams.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .grammar import (
    TERMINATOR, ContrastRule, Grammar, GrammarError, LexEntry, Slot, Template,
    interpolate,
)


class GenerationError(ValueError):
    pass


@dataclass(frozen=True)
class Realization:
    """One grammatical filling of a template's slots."""

    template: Template
    var_values: dict[str, str]
    entries: tuple[LexEntry, ...]       # chosen entry per slot
    values: tuple[str | None, ...]      # realized inflection value per slot
    tokens: tuple[str, ...]             # rendered sentence incl. final "."
    spans: tuple[tuple[int, int], ...]  # per-slot [start, end) token spans


@dataclass(frozen=True)
class MinimalPair:
    pair_id: str
    condition: str
    subcondition: str
    features: dict[str, str]
    grammatical: tuple[str, ...]
    ungrammatical: tuple[str, ...]
    contrast_positions: tuple[int, ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "pair_id": self.pair_id,
                "condition": self.condition,
                "subcondition": self.subcondition,
                "features": self.features,
                "grammatical": list(self.grammatical),
                "ungrammatical": list(self.ungrammatical),
                "contrast_positions": list(self.contrast_positions),
            },
            ensure_ascii=False,
        )

    @classmethod
    def from_json(cls, line: str) -> "MinimalPair":
        d = json.loads(line)
        return cls(
            pair_id=d["pair_id"],
            condition=d["condition"],
            subcondition=d["subcondition"],
            features=d["features"],
            grammatical=tuple(d["grammatical"]),
            ungrammatical=tuple(d["ungrammatical"]),
            contrast_positions=tuple(d["contrast_positions"]),
        )


def _pair_id(condition: str, subcondition: str,
             gram: Sequence[str], ungram: Sequence[str]) -> str:
    # Content-derived and stable across runs.  Both members participate:
    # one grammatical sentence can pair against several ungrammatical
    # variants (quantifier substitutions, anaphor choices).
    key = "\x1f".join([condition, subcondition, " ".join(gram), " ".join(ungram)])
    return hashlib.sha1(key.encode("utf-8")).hexdigest()[:16]


def _slot_candidates(grammar: Grammar, template: Template, slot: Slot,
                     var_values: dict[str, str]) -> list[LexEntry]:
    cls = grammar.lexicon[slot.cls]
    if slot.lemma is not None:
        entries = [cls.entry(slot.lemma)]
    else:
        entries = list(cls.entries)
    for feat, var in slot.select.items():
        want = var_values[var]
        entries = [e for e in entries if e.features.get(feat) == want]
    return entries


def _slot_value(slot: Slot, var_values: dict[str, str]) -> str | None:
    if slot.inflect is not None:
        return var_values[slot.inflect]
    return slot.inflect_value


def expand_template(grammar: Grammar, template: Template) -> Iterator[Realization]:
    """All grammatical realizations, in deterministic lexicographic order."""
    var_names = [v for v, _ in template.variables]
    var_domains = [grammar.feature_domains[f] for _, f in template.variables]
    for combo in product(*var_domains):
        var_values = dict(zip(var_names, combo))
        candidate_lists = [
            _slot_candidates(grammar, template, slot, var_values)
            for slot in template.slots
        ]
        for choice in _distinct_product(template.slots, candidate_lists):
            tokens: list[str] = []
            spans: list[tuple[int, int]] = []
            values: list[str | None] = []
            for slot, entry in zip(template.slots, choice):
                value = _slot_value(slot, var_values)
                surface = entry.surface(value)
                spans.append((len(tokens), len(tokens) + len(surface)))
                tokens.extend(surface)
                values.append(value)
            tokens.append(TERMINATOR)
            yield Realization(
                template=template,
                var_values=var_values,
                entries=tuple(choice),
                values=tuple(values),
                tokens=tuple(tokens),
                spans=tuple(spans),
            )


def _distinct_product(slots: Sequence[Slot],
                      candidates: Sequence[Sequence[LexEntry]]) -> Iterator[tuple[LexEntry, ...]]:
    """Cartesian product over slots honoring distinct_from constraints."""
    name_to_index = {s.name: i for i, s in enumerate(slots)}
    chosen: list[LexEntry] = []

    def walk(i: int) -> Iterator[tuple[LexEntry, ...]]:
        if i == len(slots):
            yield tuple(chosen)
            return
        slot = slots[i]
        for entry in candidates[i]:
            if slot.distinct_from is not None:
                other = chosen[name_to_index[slot.distinct_from]]
                if other.lemma == entry.lemma:
                    continue
            chosen.append(entry)
            yield from walk(i + 1)
            chosen.pop()

    return walk(0)


def _splice(tokens: tuple[str, ...], span: tuple[int, int],
            replacement: tuple[str, ...]) -> tuple[str, ...]:
    return tokens[: span[0]] + replacement + tokens[span[1]:]


def _other_value(grammar: Grammar, feature: str, value: str) -> str:
    domain = grammar.feature_domains[feature]
    if len(domain) != 2:
        raise GenerationError(
            f"inflection_swap needs a binary feature, {feature} has {len(domain)} values")
    return domain[0] if value == domain[1] else domain[1]


def apply_contrast(grammar: Grammar, real: Realization) -> list[tuple[tuple[str, ...], str]]:
    """Ungrammatical counterparts of a realization: (tokens, variant label)."""
    t = real.template
    rule = t.contrast
    slot_index = {s.name: i for i, s in enumerate(t.slots)}

    if rule.kind == "inflection_swap":
        i = slot_index[rule.target]
        slot, entry, value = t.slots[i], real.entries[i], real.values[i]
        feature = grammar.lexicon[slot.cls].inflects
        flipped = entry.surface(_other_value(grammar, feature, value))
        return [(_splice(real.tokens, real.spans[i], flipped), "inflection")]

    if rule.kind == "anaphor_swap":
        i = slot_index[rule.target]
        cls = grammar.lexicon[t.slots[i].cls]
        out = []
        for lemma in rule.swap_map[real.entries[i].lemma]:
            surface = cls.entry(lemma).surface(None)
            out.append((_splice(real.tokens, real.spans[i], surface), lemma))
        return out

    if rule.kind == "quantifier_swap":
        i = slot_index[rule.target]
        cls = grammar.lexicon[t.slots[i].cls]
        out = []
        for lemma in rule.replacements:
            surface = cls.entry(lemma).surface(None)
            out.append((_splice(real.tokens, real.spans[i], surface), lemma))
        return out

    if rule.kind == "licensor_swap":
        a, b = slot_index[rule.slot_a], slot_index[rule.slot_b]
        span_a, span_b = real.spans[a], real.spans[b]
        surf_a = real.tokens[span_a[0]: span_a[1]]
        surf_b = real.tokens[span_b[0]: span_b[1]]
        if len(surf_a) != len(surf_b):
            raise GenerationError("licensor_swap slots must have equal token length")
        swapped = _splice(real.tokens, span_a, surf_b)
        swapped = _splice(swapped, span_b, surf_a)
        return [(swapped, "licensor_swap")]

    raise GenerationError(f"unknown contrast kind {rule.kind!r}")


_EXPECTED_POSITIONS = {
    "inflection_swap": 1,
    "anaphor_swap": 1,
    "quantifier_swap": 1,
    "licensor_swap": 2,
}


def _diff_positions(a: Sequence[str], b: Sequence[str]) -> tuple[int, ...]:
    return tuple(i for i, (x, y) in enumerate(zip(a, b)) if x != y)


def pair_features(grammar: Grammar, real: Realization, variant: str) -> dict[str, str]:
    feats = {
        k: interpolate(v, real.var_values)
        for k, v in real.template.features.items()
    }
    for slot, entry in zip(real.template.slots, real.entries):
        if slot.lemma is None:  # fixed function words carry no information
            feats[f"lex_{slot.name}"] = entry.lemma
    feats["contrast_variant"] = variant
    return feats


def generate_pairs(grammar: Grammar,
                   conditions: Iterable[str] | None = None) -> Iterator[MinimalPair]:
    """Deterministic stream of minimal pairs over the whole grammar.

    Aborts if a contrast rule produces a sequence identical to the
    grammatical member (a lexicon entry whose swapped forms coincide), or
    one differing at the wrong number of positions for its rule kind.
    """
    wanted = set(conditions) if conditions is not None else None
    for template in grammar.templates:
        if wanted is not None and template.condition not in wanted:
            continue
        subcondition_pattern = template.subcondition
        for real in expand_template(grammar, template):
            subcondition = interpolate(subcondition_pattern, real.var_values)
            for ungram, variant in apply_contrast(grammar, real):
                if len(ungram) != len(real.tokens):
                    raise GenerationError(
                        f"contrast changed sentence length in "
                        f"{template.condition}/{subcondition}: "
                        f"{' '.join(real.tokens)!r} -> {' '.join(ungram)!r}")
                positions = _diff_positions(real.tokens, ungram)
                if not positions:
                    raise GenerationError(
                        f"contrast produced an identical sequence in "
                        f"{template.condition}/{subcondition} for "
                        f"{' '.join(real.tokens)!r}")
                if len(positions) != _EXPECTED_POSITIONS[template.contrast.kind]:
                    raise GenerationError(
                        f"{template.contrast.kind} changed {len(positions)} "
                        f"positions in {template.condition}/{subcondition}: "
                        f"{' '.join(real.tokens)!r} -> {' '.join(ungram)!r}")
                yield MinimalPair(
                    pair_id=_pair_id(template.condition, subcondition,
                                     real.tokens, ungram),
                    condition=template.condition,
                    subcondition=subcondition,
                    features=pair_features(grammar, real, variant),
                    grammatical=real.tokens,
                    ungrammatical=ungram,
                    contrast_positions=positions,
                )


def write_pairs(pairs: Iterable[MinimalPair], path) -> dict[str, int]:
    """Write pairs as JSON Lines; returns per-condition pair counts."""
    counts: dict[str, int] = {}
    with open(path, "w", encoding="utf-8") as fh:
        for pair in pairs:
            fh.write(pair.to_json())
            fh.write("\n")
            counts[pair.condition] = counts.get(pair.condition, 0) + 1
    return counts


def read_pairs(path) -> Iterator[MinimalPair]:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield MinimalPair.from_json(line)


# --- pair validity checking -------------------------------------------------

def recheck_violations(grammar: Grammar, template: Template, real: Realization,
                       pair: MinimalPair) -> dict[str, bool]:
    """Evaluate every agreement group of the template against the
    ungrammatical member.  Returns {variable: satisfied}.

    A group is the set of slots bound to one iteration variable (via
    inflect or select).  It is satisfied when all member slots' surfaces
    still express that variable's value.
    """
    results: dict[str, bool] = {}
    for var, feature in template.variables:
        ok = True
        for i, slot in enumerate(template.slots):
            span = real.spans[i]
            surface = pair.ungrammatical[span[0]: span[1]]
            entry = real.entries[i]
            if slot.inflect == var:
                expressed = entry.value_of_surface(surface)
                if expressed != real.var_values[var]:
                    ok = False
            elif var in slot.select.values():
                feats = _entry_for_surface(grammar, slot, surface)
                sel = [f for f, v in slot.select.items() if v == var]
                for f in sel:
                    if feats.get(f) != real.var_values[var]:
                        ok = False
        results[var] = ok
    return results


def _entry_for_surface(grammar: Grammar, slot: Slot,
                       surface: tuple[str, ...]) -> dict[str, str]:
    cls = grammar.lexicon[slot.cls]
    for entry in cls.entries:
        for toks in entry.forms.values():
            if toks == surface:
                return entry.features
    return {}


def targeted_groups(template: Template) -> set[str]:
    """Variables whose agreement the contrast rule is meant to violate."""
    rule = template.contrast
    if rule.kind == "inflection_swap":
        slot = template.slot(rule.target)
        return {slot.inflect} if slot.inflect is not None else set()
    if rule.kind == "anaphor_swap":
        slot = template.slot(rule.target)
        return set(slot.select.values())
    return set()  # NPI swaps violate licensing, not feature agreement
