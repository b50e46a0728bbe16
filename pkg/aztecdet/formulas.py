"""
Catalog of Gamma-product formulas, read from ``ProductFormulas.txt``.

Every record is validated when the module is imported: its Gamma arguments
must pair off by integer differences for every residue class of the product
index, otherwise the load fails with ValueError.
"""
import math
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from aztecdet.dataclasses import KKSParams, PathFamilyParams, PathKind, WeightTriple
from aztecdet.exact_arith import gamma_ratio_product

__all__ = [
    "CATALOG_FILE",
    "LinearForm",
    "ProductFormula",
    "load_catalog",
    "catalog",
    "get_formula",
    "eval_formula",
    "formula_ratio",
    "formula_table",
]

CATALOG_FILE = os.path.join(os.path.dirname(os.path.realpath(__file__)), "ProductFormulas.txt")

_TERM = re.compile(r"([+-])?(\d+)?([a-z]+)?")


@dataclass(frozen=True)
class LinearForm:
    """
    (constant + sum coeff * variable) / denominator, e.g. ``(3i+k-2)/2``.
    """

    text: str
    constant: Fraction
    coefficients: Tuple[Tuple[str, Fraction], ...]

    @classmethod
    def parse(cls, text: str) -> "LinearForm":
        body, denominator = text, 1
        match = re.fullmatch(r"\((.+)\)/(\d+)|([^()]+)/(\d+)", text)
        if match:
            body = match.group(1) or match.group(3)
            denominator = int(match.group(2) or match.group(4))
        constant = Fraction(0)
        coefficients: Dict[str, Fraction] = {}
        pos = 0
        while pos < len(body):
            term = _TERM.match(body, pos)
            sign, digits, name = term.groups()
            if term.end() == pos or (digits is None and name is None) or (pos > 0 and sign is None):
                raise ValueError(f"cannot parse linear expression {text!r} at position {pos}")
            value = Fraction(int(digits) if digits else 1, denominator) * (-1 if sign == "-" else 1)
            if name:
                coefficients[name] = coefficients.get(name, Fraction(0)) + value
            else:
                constant += value
            pos = term.end()
        return cls(text, constant, tuple(sorted(coefficients.items())))

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.coefficients)

    def __call__(self, env: Dict[str, int]) -> Fraction:
        try:
            return self.constant + sum((c * env[name] for name, c in self.coefficients), Fraction(0))
        except KeyError as exc:
            raise KeyError(f"expression {self.text!r} needs a value for {exc.args[0]!r}") from None


GammaList = Tuple[Tuple[LinearForm, ...], Tuple[LinearForm, ...]]


@dataclass
class ProductFormula:
    """
    constant * prod base^(c2 n^2 + c1 n + c0) * [Gamma ratio in n]
    * prod_(i=1..n) [rational factor(i)] [Gamma ratio(i)]
    """

    id: str
    title: str = ""
    #: Extra parameters and their defaults.
    params: Dict[str, int] = field(default_factory=dict)
    constant: Fraction = Fraction(1)
    powers: List[Tuple[LinearForm, Fraction, Fraction, Fraction]] = field(default_factory=list)
    ngamma: GammaList = ((), ())
    factors: GammaList = ((), ())
    gammas: GammaList = ((), ())
    #: m, l, a, b, c, d of the KKS determinant the product equals up to ``scale``.
    kks: Optional[Tuple[LinearForm, ...]] = None
    scale: Fraction = Fraction(1)
    #: kind, s, r and the weights of the path family.
    lattice: Optional[Tuple[PathKind, LinearForm, LinearForm, Fraction, Fraction, Fraction]] = None

    def environment(self, n: int, overrides: Dict[str, int]) -> Dict[str, int]:
        unknown = set(overrides) - set(self.params)
        if unknown:
            raise TypeError(f"formula {self.id} has no parameter(s) {sorted(unknown)}; it takes {sorted(self.params)}")
        env = dict(self.params)
        env.update(overrides)
        env["n"] = n
        return env

    def evaluate(self, n: int, **params: int) -> Fraction:
        if n < 1:
            raise ValueError(f"formula {self.id} is defined for n >= 1, got {n}")
        env = self.environment(n, params)
        value = Fraction(self.constant)
        for base, c2, c1, c0 in self.powers:
            exponent = c2 * n * n + c1 * n + c0
            if exponent.denominator != 1:
                raise ValueError(f"formula {self.id}: exponent {exponent} at n={n} is not an integer")
            value *= base(env) ** int(exponent)
        value *= gamma_ratio_product([a(env) for a in self.ngamma[0]], [a(env) for a in self.ngamma[1]])
        for i in range(1, n + 1):
            env["i"] = i
            for expr in self.factors[0]:
                value *= expr(env)
            for expr in self.factors[1]:
                value /= expr(env)
            value *= gamma_ratio_product([a(env) for a in self.gammas[0]], [a(env) for a in self.gammas[1]])
        return value

    def kks_params(self, n: int, **params: int) -> KKSParams:
        if self.kks is None:
            raise ValueError(f"formula {self.id} is not attached to a KKS determinant")
        env = self.environment(n, params)
        m, l, a, b, c, d = (expr(env) for expr in self.kks)
        return KKSParams(int(m), l, int(a), int(b), int(c), int(d), n)

    def path_family(self, n: int, **params: int) -> Tuple[PathFamilyParams, WeightTriple]:
        if self.lattice is None:
            raise ValueError(f"formula {self.id} is not attached to a path family")
        env = self.environment(n, params)
        kind, s, r, w1, w2, w3 = self.lattice
        return PathFamilyParams(int(s(env)), int(r(env)), n, kind), WeightTriple(w1, w2, w3)

    def index_period(self) -> int:
        """
        lcm of the denominators of the Gamma arguments; pairings repeat with this period in i.
        """
        denominators = [1]
        for side in self.gammas + self.ngamma:
            for expr in side:
                denominators.extend(c.denominator for _, c in expr.coefficients)
                denominators.append(expr.constant.denominator)
        return math.lcm(*denominators)

    def validate(self) -> None:
        """
        Evaluate at n = 1..max(2, period) with default parameters so that every
        residue class of i is paired at least once.
        """
        for n in range(1, max(2, self.index_period()) + 1):
            try:
                value = self.evaluate(n)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"catalog entry {self.id} does not evaluate at n={n}: {exc}") from exc
            if value <= 0:
                raise ValueError(f"catalog entry {self.id} is not positive at n={n}: {value}")


def _split(fields: List[str], keyword: str, formula_id: str) -> GammaList:
    if fields.count("/") != 1:
        raise ValueError(f"formula {formula_id}: '{keyword}' needs exactly one ' / ' separator")
    cut = fields.index("/")
    return tuple(LinearForm.parse(f) for f in fields[:cut]), tuple(LinearForm.parse(f) for f in fields[cut + 1 :])


def _join(old: GammaList, new: GammaList) -> GammaList:
    return old[0] + new[0], old[1] + new[1]


def load_catalog(path: str = CATALOG_FILE) -> Dict[str, ProductFormula]:
    """
    Parse a catalog file into ProductFormula records, keyed by id, and validate them.
    """
    formulas: Dict[str, ProductFormula] = {}
    current: Optional[ProductFormula] = None
    with open(path, encoding="utf-8") as catalog_file:
        for lineno, line in enumerate(catalog_file, 1):
            if line.startswith(";") or not line.strip():
                continue
            keyword, *fields = line.split()
            where = f"{os.path.basename(path)}:{lineno}"
            if keyword == "formula":
                if current is not None:
                    raise ValueError(f"{where}: formula {current.id} is missing 'end'")
                current = ProductFormula(fields[0])
                continue
            if current is None:
                raise ValueError(f"{where}: '{keyword}' outside a formula record")
            if keyword == "end":
                if current.id in formulas:
                    raise ValueError(f"{where}: duplicate formula id {current.id}")
                current.validate()
                formulas[current.id] = current
                current = None
            elif keyword == "title":
                current.title = line.split(None, 1)[1].strip()
            elif keyword == "params":
                current.params = {name: int(value) for name, value in (f.split("=") for f in fields)}
            elif keyword == "constant":
                current.constant = Fraction(fields[0])
            elif keyword == "scale":
                current.scale = Fraction(fields[0])
            elif keyword == "power":
                base, c2, c1, c0 = fields
                current.powers.append((LinearForm.parse(base), Fraction(c2), Fraction(c1), Fraction(c0)))
            elif keyword == "ngamma":
                current.ngamma = _join(current.ngamma, _split(fields, keyword, current.id))
            elif keyword == "factor":
                current.factors = _join(current.factors, _split(fields, keyword, current.id))
            elif keyword == "gamma":
                current.gammas = _join(current.gammas, _split(fields, keyword, current.id))
            elif keyword == "kks":
                if len(fields) != 6:
                    raise ValueError(f"{where}: 'kks' needs m l a b c d")
                current.kks = tuple(LinearForm.parse(f) for f in fields)
            elif keyword == "lattice":
                kind, s, r, w1, w2, w3 = fields
                current.lattice = (PathKind(kind), LinearForm.parse(s), LinearForm.parse(r), Fraction(w1), Fraction(w2), Fraction(w3))
            else:
                raise ValueError(f"{where}: unknown keyword {keyword!r}")
    if current is not None:
        raise ValueError(f"formula {current.id} is missing 'end'")
    return formulas


_CATALOG = load_catalog()


def catalog() -> Dict[str, ProductFormula]:
    return dict(_CATALOG)


def get_formula(formula_id: str) -> ProductFormula:
    try:
        return _CATALOG[formula_id]
    except KeyError:
        raise KeyError(f"unknown formula {formula_id!r}, expected one of {sorted(_CATALOG)}") from None


def eval_formula(formula_id: str, n: int, **params: int) -> Fraction:
    """
    Exact value of catalog entry ``formula_id`` at ``n``.

    Example
    -------
    >>> eval_formula("DF", 4)
    Fraction(3328, 1)
    >>> eval_formula("epilogue", 3, s=2)
    Fraction(27, 1)
    """
    return get_formula(formula_id).evaluate(n, **params)


def formula_ratio(formula_id: str, n: int, **params: int) -> Fraction:
    """
    eval_formula(n) / eval_formula(n - 1), the value at 0 being the empty product 1.
    """
    if n < 1:
        raise ValueError(f"formula_ratio needs n >= 1, got {n}")
    previous = Fraction(1) if n == 1 else eval_formula(formula_id, n - 1, **params)
    return eval_formula(formula_id, n, **params) / previous


def formula_table(formula_id: str, n_max: int, **params: int) -> List[Tuple[int, Fraction]]:
    return [(n, eval_formula(formula_id, n, **params)) for n in range(1, n_max + 1)]
