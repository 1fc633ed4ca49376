"""Run configuration: flat ``key=value`` files plus ``--param`` overrides."""
from __future__ import annotations

from dataclasses import dataclass, field, fields, replace

from .dtree import DTreeParams
from .errors import ParseError
from .tbl import TblParams

# name -> (section, type, default, help)
PARAMS = {
    "context_length": ("dtree", int, 2, "preceding tags in the transition context"),
    "min_gain": ("dtree", float, 0.7, "context-tree pruning threshold (bits)"),
    "eq_class_weight": ("dtree", float, 0.15, "ambiguity-class interpolation weight"),
    "affix_gain": ("dtree", float, 1.2, "affix-tree pruning threshold (bits)"),
    "max_suffix": ("dtree", int, 5, "longest suffix in the affix tree"),
    "weighted_gain": ("dtree", bool, True, "weight split gain by the node's sample count"),
    "lexical_threshold": ("tbl", int, 2, "minimum score of a lexical rule"),
    "contextual_threshold": ("tbl", int, 1, "minimum score of a contextual rule"),
    "bigram_restriction": ("tbl", int, 500, "frequent words usable in word templates"),
    "default_tag": ("tbl", str, "NN", "initial tag of unknown words"),
    "denominator": ("run", int, 8, "every n-th sentence goes to the test part"),
    "validate_tagset": ("run", bool, True, "reject tags outside the tagset"),
    "remap_cardnum": ("run", bool, True, "retag digit-sequence CARD as CARDNUM when splitting"),
}


def _convert(name, typ, value: str):
    if typ is bool:
        v = value.strip().lower()
        if v in ("1", "true", "yes", "on"):
            return True
        if v in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"{name}: expected a boolean, got {value!r}")
    try:
        return typ(value.strip())
    except ValueError:
        raise ValueError(f"{name}: expected {typ.__name__}, got {value!r}") from None


@dataclass(frozen=True)
class RunConfig:
    values: dict = field(default_factory=lambda: {k: v[2] for k, v in PARAMS.items()})

    def __getattr__(self, name):
        try:
            return self.__dict__["values"][name]
        except KeyError:
            raise AttributeError(name) from None

    def set(self, name: str, raw: str) -> "RunConfig":
        if name not in PARAMS:
            raise ValueError(f"unknown parameter {name!r}")
        vals = dict(self.values)
        vals[name] = _convert(name, PARAMS[name][1], raw)
        return replace(self, values=vals)

    def dtree_params(self) -> DTreeParams:
        return DTreeParams(**{f.name: self.values[f.name] for f in fields(DTreeParams)})

    def tbl_params(self) -> TblParams:
        return TblParams(**{f.name: self.values[f.name] for f in fields(TblParams)})

    def dump(self) -> str:
        return "".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}\n"
                       for k, v in self.values.items())


def parse_config(text: str, base: RunConfig | None = None, source=None) -> RunConfig:
    cfg = base or RunConfig()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(lineno, "expected key=value", source)
        try:
            cfg = cfg.set(key.strip(), value)
        except ValueError as exc:
            raise ParseError(lineno, str(exc), source) from None
    return cfg


def apply_overrides(cfg: RunConfig, pairs) -> RunConfig:
    for pair in pairs or ():
        key, sep, value = pair.partition("=")
        if not sep:
            raise ValueError(f"--param expects name=value, got {pair!r}")
        cfg = cfg.set(key.strip(), value)
    return cfg
