"""Declarative template grammars: loading, validation, condition enumeration.

A grammar document is JSON with four top-level sections:

  conditions   ordered list of {id, display, section} condition families
  features     feature name -> ordered list of values (e.g. number: [sg, pl])
  lexicon      class name -> {inflects, entries}; each entry carries either a
               single surface "form" or a feature-value-keyed "forms" table,
               plus optional selectional "features" (animacy, gender, fixed
               number, ...).  Surfaces may be multi-word and are stored as
               token sequences.
  templates    ordered list; each names its condition, a subcondition pattern
               (may interpolate {var}), iteration variables, a flat slot
               sequence, extra feature metadata patterns, and exactly one
               contrast rule.

Slot fields: name, class, and one of `lemma` (fixed entry), free choice over
the class, or `select` (feature -> variable) filtering entries by feature
value.  `inflect` binds the slot's surface to a variable over the class's
inflection feature; `inflect_value` fixes it.  `distinct_from` forbids
reusing an earlier slot's lemma.

Contrast rules (single token position unless noted):
  inflection_swap   {target}: re-render the target slot at the opposite
                    feature value
  anaphor_swap      {target, map}: lemma -> list of replacement lemmas
  quantifier_swap   {target, replacements}: list of replacement lemmas
  licensor_swap     {slot_a, slot_b}: exchange the two slots' surfaces
                    (touches two positions)
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Any, Iterable

TERMINATOR = "."  # every rendered sentence ends with this token


class GrammarError(ValueError):
    pass


@dataclass(frozen=True)
class LexEntry:
    lemma: str
    forms: dict[str, tuple[str, ...]]  # feature value (or "base") -> tokens
    features: dict[str, str]

    def surface(self, value: str | None) -> tuple[str, ...]:
        return self.forms["base" if value is None else value]

    def value_of_surface(self, tokens: tuple[str, ...]) -> str | None:
        """Inverse of surface(); None when the tokens match no form."""
        for value, toks in self.forms.items():
            if toks == tokens:
                return value
        return None


@dataclass(frozen=True)
class LexClass:
    name: str
    inflects: str | None
    entries: tuple[LexEntry, ...]

    def entry(self, lemma: str) -> LexEntry:
        for e in self.entries:
            if e.lemma == lemma:
                return e
        raise KeyError(lemma)

    def has_lemma(self, lemma: str) -> bool:
        return any(e.lemma == lemma for e in self.entries)


@dataclass(frozen=True)
class Slot:
    name: str
    cls: str
    lemma: str | None = None
    inflect: str | None = None        # variable name
    inflect_value: str | None = None  # fixed feature value
    select: dict[str, str] = field(default_factory=dict)  # feature -> variable
    distinct_from: str | None = None


@dataclass(frozen=True)
class ContrastRule:
    kind: str
    target: str | None = None
    slot_a: str | None = None
    slot_b: str | None = None
    replacements: tuple[str, ...] = ()
    swap_map: dict[str, tuple[str, ...]] = field(default_factory=dict)


@dataclass(frozen=True)
class Template:
    condition: str
    subcondition: str  # pattern, may contain {var}
    variables: tuple[tuple[str, str], ...]  # (var name, feature name) in order
    slots: tuple[Slot, ...]
    features: dict[str, str]  # extra metadata patterns
    contrast: ContrastRule
    index: int = 0

    def slot(self, name: str) -> Slot:
        for s in self.slots:
            if s.name == name:
                return s
        raise KeyError(name)


@dataclass(frozen=True)
class ConditionInfo:
    id: str
    display: str
    section: str


@dataclass(frozen=True)
class Grammar:
    conditions: tuple[ConditionInfo, ...]
    feature_domains: dict[str, tuple[str, ...]]
    lexicon: dict[str, LexClass]
    templates: tuple[Template, ...]
    notes: str = ""

    def condition_info(self, cond_id: str) -> ConditionInfo:
        for c in self.conditions:
            if c.id == cond_id:
                return c
        raise KeyError(cond_id)


def _tokens(surface: str) -> tuple[str, ...]:
    toks = tuple(surface.lower().split())
    if not toks:
        raise GrammarError("empty surface form")
    return toks


def _parse_entry(raw: dict, where: str) -> LexEntry:
    lemma = raw.get("lemma")
    if not lemma:
        raise GrammarError(f"{where}: entry without a lemma")
    if "form" in raw:
        forms = {"base": _tokens(raw["form"])}
    elif "forms" in raw:
        forms = {value: _tokens(s) for value, s in raw["forms"].items()}
    else:
        raise GrammarError(f"{where}: entry {lemma!r} has neither form nor forms")
    return LexEntry(lemma=lemma, forms=forms, features=dict(raw.get("features", {})))


def _parse_slot(raw: dict, where: str) -> Slot:
    try:
        return Slot(
            name=raw["name"],
            cls=raw["class"],
            lemma=raw.get("lemma"),
            inflect=raw.get("inflect"),
            inflect_value=raw.get("inflect_value"),
            select=dict(raw.get("select", {})),
            distinct_from=raw.get("distinct_from"),
        )
    except KeyError as exc:
        raise GrammarError(f"{where}: slot is missing field {exc}") from None


def _parse_contrast(raw: dict, where: str) -> ContrastRule:
    kind = raw.get("kind")
    if kind not in ("inflection_swap", "anaphor_swap", "quantifier_swap", "licensor_swap"):
        raise GrammarError(f"{where}: unknown contrast kind {kind!r}")
    return ContrastRule(
        kind=kind,
        target=raw.get("target"),
        slot_a=raw.get("slot_a"),
        slot_b=raw.get("slot_b"),
        replacements=tuple(raw.get("replacements", ())),
        swap_map={k: tuple(v) for k, v in raw.get("map", {}).items()},
    )


def load_grammar(source: str | os.PathLike | dict) -> Grammar:
    """Parse and validate a grammar document (path or already-parsed dict).

    All schema violations are collected and reported together, each with the
    location (class, template condition/subcondition and index) it occurred at.
    """
    if isinstance(source, dict):
        doc = source
    else:
        with open(source, encoding="utf-8") as fh:
            doc = json.load(fh)

    errors: list[str] = []

    conditions = []
    seen_cond = set()
    for raw in doc.get("conditions", []):
        cid = raw.get("id")
        if cid in seen_cond:
            errors.append(f"conditions: duplicate condition id {cid!r}")
        seen_cond.add(cid)
        conditions.append(ConditionInfo(
            id=cid,
            display=raw.get("display", cid),
            section=raw.get("section", ""),
        ))

    feature_domains = {k: tuple(v) for k, v in doc.get("features", {}).items()}

    lexicon: dict[str, LexClass] = {}
    for name, raw_cls in doc.get("lexicon", {}).items():
        inflects = raw_cls.get("inflects")
        if inflects is not None and inflects not in feature_domains:
            errors.append(f"lexicon class {name!r}: unknown inflection feature {inflects!r}")
        entries = []
        for raw_e in raw_cls.get("entries", []):
            try:
                entries.append(_parse_entry(raw_e, f"lexicon class {name!r}"))
            except GrammarError as exc:
                errors.append(str(exc))
        lexicon[name] = LexClass(name=name, inflects=inflects, entries=tuple(entries))

    templates: list[Template] = []
    for idx, raw_t in enumerate(doc.get("templates", [])):
        where = (f"template #{idx} "
                 f"({raw_t.get('condition')!r}/{raw_t.get('subcondition')!r})")
        cond = raw_t.get("condition")
        if cond not in seen_cond:
            errors.append(f"{where}: unknown condition {cond!r}")
        variables = tuple((v, f) for v, f in raw_t.get("vars", {}).items())
        for var, feat in variables:
            if feat not in feature_domains:
                errors.append(f"{where}: variable {var!r} ranges over unknown feature {feat!r}")
        slots = []
        for raw_s in raw_t.get("slots", []):
            try:
                slots.append(_parse_slot(raw_s, where))
            except GrammarError as exc:
                errors.append(str(exc))
        try:
            contrast = _parse_contrast(raw_t.get("contrast", {}), where)
        except GrammarError as exc:
            errors.append(str(exc))
            contrast = ContrastRule(kind="inflection_swap")
        template = Template(
            condition=cond,
            subcondition=raw_t.get("subcondition", ""),
            variables=variables,
            slots=tuple(slots),
            features=dict(raw_t.get("features", {})),
            contrast=contrast,
            index=idx,
        )
        errors.extend(_validate_template(template, lexicon, feature_domains, where))
        templates.append(template)

    if errors:
        raise GrammarError("invalid grammar:\n  " + "\n  ".join(errors))

    return Grammar(
        conditions=tuple(conditions),
        feature_domains=feature_domains,
        lexicon=lexicon,
        templates=tuple(templates),
        notes=doc.get("notes", ""),
    )


def _validate_template(t: Template, lexicon: dict[str, LexClass],
                       domains: dict[str, tuple[str, ...]], where: str) -> list[str]:
    errors: list[str] = []
    var_feature = dict(t.variables)
    slot_names = set()

    for slot in t.slots:
        if slot.name in slot_names:
            errors.append(f"{where}: duplicate slot name {slot.name!r}")
        slot_names.add(slot.name)
        cls = lexicon.get(slot.cls)
        if cls is None:
            errors.append(f"{where}: slot {slot.name!r} references unknown class {slot.cls!r}")
            continue
        entries = cls.entries
        if slot.lemma is not None:
            if not cls.has_lemma(slot.lemma):
                errors.append(f"{where}: slot {slot.name!r} fixes unknown lemma "
                              f"{slot.lemma!r} in class {slot.cls!r}")
                continue
            entries = (cls.entry(slot.lemma),)
        if slot.inflect is not None or slot.inflect_value is not None:
            if cls.inflects is None:
                errors.append(f"{where}: slot {slot.name!r} inflects non-inflecting "
                              f"class {slot.cls!r}")
                continue
            if slot.inflect is not None and slot.inflect not in var_feature:
                errors.append(f"{where}: slot {slot.name!r} binds undeclared "
                              f"variable {slot.inflect!r}")
                continue
            values = (domains[var_feature[slot.inflect]] if slot.inflect is not None
                      else (slot.inflect_value,))
            for entry in entries:
                for value in values:
                    if value not in entry.forms:
                        errors.append(
                            f"{where}: entry {entry.lemma!r} of class {slot.cls!r} "
                            f"has no surface form for {cls.inflects}={value!r}")
        else:
            for entry in entries:
                if "base" not in entry.forms:
                    errors.append(
                        f"{where}: slot {slot.name!r} uses entry {entry.lemma!r} "
                        f"without inflection but it has no base form")
        for feat, var in slot.select.items():
            if var not in var_feature:
                errors.append(f"{where}: slot {slot.name!r} selects on undeclared "
                              f"variable {var!r}")
                continue
            for value in domains[var_feature[var]]:
                if not any(e.features.get(feat) == value for e in entries):
                    errors.append(
                        f"{where}: slot {slot.name!r} has no entry in class "
                        f"{slot.cls!r} with {feat}={value!r}")
        if slot.distinct_from is not None and slot.distinct_from not in slot_names:
            errors.append(f"{where}: slot {slot.name!r} is distinct_from unknown "
                          f"earlier slot {slot.distinct_from!r}")

    c = t.contrast
    if c.kind in ("inflection_swap", "anaphor_swap", "quantifier_swap"):
        if c.target not in slot_names:
            errors.append(f"{where}: contrast targets unknown slot {c.target!r}")
    if c.kind == "licensor_swap":
        for s in (c.slot_a, c.slot_b):
            if s not in slot_names:
                errors.append(f"{where}: contrast references unknown slot {s!r}")
    if c.kind == "quantifier_swap" and c.target in slot_names:
        cls = lexicon.get(t.slot(c.target).cls)
        for lemma in c.replacements:
            if cls is not None and not cls.has_lemma(lemma):
                errors.append(f"{where}: contrast replacement {lemma!r} is not in "
                              f"class {cls.name!r}")
    if c.kind == "anaphor_swap" and c.target in slot_names:
        cls = lexicon.get(t.slot(c.target).cls)
        if cls is not None:
            for lemma, repls in c.swap_map.items():
                for x in (lemma, *repls):
                    if not cls.has_lemma(x):
                        errors.append(f"{where}: contrast map references unknown "
                                      f"lemma {x!r} in class {cls.name!r}")
    return errors


def enumerate_conditions(grammar: Grammar) -> list[tuple[str, str]]:
    """Stable ordered list of (condition, subcondition) ids.

    Subcondition patterns are expanded over the variables they mention, in
    template order, deduplicated on first appearance.
    """
    out: list[tuple[str, str]] = []
    seen = set()
    for t in grammar.templates:
        for sub in _expand_subconditions(grammar, t):
            key = (t.condition, sub)
            if key not in seen:
                seen.add(key)
                out.append(key)
    return out


def _expand_subconditions(grammar: Grammar, t: Template) -> list[str]:
    from itertools import product

    used = [(v, f) for v, f in t.variables if "{" + v + "}" in t.subcondition]
    if not used:
        return [t.subcondition]
    names = [v for v, _ in used]
    domains = [grammar.feature_domains[f] for _, f in used]
    return [
        t.subcondition.format(**dict(zip(names, combo)))
        for combo in product(*domains)
    ]


def interpolate(pattern: str, values: dict[str, str]) -> str:
    """Fill {var} holes in a subcondition or feature pattern."""
    if "{" not in pattern:
        return pattern
    return pattern.format(**values)
