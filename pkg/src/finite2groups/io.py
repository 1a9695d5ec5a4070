"""JSON reading and writing for every object kind."""

import json

from .classification import hom_module, psi_from_images, validate_special_hom, validate_two_hom
from .cohomology import Module, cochain_from_flat
from .finite_algebra import FinAbGroup, validate_action, validate_group, validate_hom
from .monoidal_groupoid import InverseChoice, MonoidalGroupoid, validate_monoidal_groupoid
from .twogroups import validate_crossed_module, validate_quadruple, validate_strict_two_group


class FormatError(ValueError):
    """Malformed JSON input: wrong kind, missing field or bad shape."""


def dumps(obj):
    """Compact, key-order-stable, newline-terminated."""
    return json.dumps(obj, separators=(",", ":")) + "\n"


def load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _kind(obj, *kinds):
    if not isinstance(obj, dict) or obj.get("kind") not in kinds:
        got = obj.get("kind") if isinstance(obj, dict) else type(obj).__name__
        raise FormatError(f"expected kind {' or '.join(kinds)}, got {got}")
    return obj["kind"]


def _field(obj, name):
    try:
        return obj[name]
    except KeyError:
        raise FormatError(f"{obj.get('kind', 'object')} is missing field {name!r}") from None


def read_group(obj):
    """A FiniteGroup; abelian descriptions become their flat-index table."""
    if _kind(obj, "group", "abelian") == "abelian":
        return read_abelian(obj).as_group
    table = _field(obj, "table")
    if "order" in obj and obj["order"] != len(table):
        raise FormatError(f"order {obj['order']} does not match a table with {len(table)} rows")
    return validate_group(table)


def read_abelian(obj):
    _kind(obj, "abelian")
    return FinAbGroup(tuple(_field(obj, "invariant_factors")))


def read_action(obj, G, target):
    _kind(obj, "action")
    return validate_action(G, target, _field(obj, "perms"))


def read_cochain(obj, module):
    _kind(obj, "cochain")
    n = int(_field(obj, "degree"))
    values = _field(obj, "values")
    m, k = module.group.order, module.coeffs.rank
    if len(values) != m ** n or any(len(v) != k for v in values):
        raise FormatError(f"degree-{n} cochain needs {m ** n} values of {k} components")
    return cochain_from_flat(module, n, values)


def read_module(group, coeffs, action):
    G = read_group(group)
    H = read_abelian(coeffs)
    return Module(G, H, read_action(action, G, H))


def read_crossed_module(obj):
    _kind(obj, "crossed_module")
    G = read_group(_field(obj, "G"))
    H = read_group(_field(obj, "H"))
    alpha = _field(obj, "alpha")
    _kind(alpha, "action")
    return validate_crossed_module(G, H, _field(obj, "t"), _field(alpha, "perms"))


def read_strict(obj):
    _kind(obj, "strict_two_group")
    return validate_strict_two_group(read_group(_field(obj, "C0")), read_group(_field(obj, "C1")),
                                     _field(obj, "s"), _field(obj, "t"), _field(obj, "i"),
                                     obj.get("comp"))


def read_quadruple(obj):
    _kind(obj, "two_group")
    G = read_group(_field(obj, "group"))
    H = read_abelian(_field(obj, "coeffs"))
    alpha = read_action(_field(obj, "alpha"), G, H)
    a = read_cochain(_field(obj, "a"), Module(G, H, alpha))
    return validate_quadruple(G, H, alpha, a)


def read_groupoid(obj, validate=True):
    _kind(obj, "monoidal_groupoid")
    try:
        M = MonoidalGroupoid.from_json(obj)
    except KeyError as exc:
        raise FormatError(f"monoidal_groupoid is missing field {exc}") from None
    except ValueError as exc:
        raise FormatError(f"bad monoidal_groupoid tables: {exc}") from None
    return validate_monoidal_groupoid(M) if validate else M


def read_choice(obj):
    _kind(obj, "inverse_choice")
    try:
        return InverseChoice.from_json(obj)
    except KeyError as exc:
        raise FormatError(f"choice entry is missing field {exc}") from None


def _hom_body(obj, q, q2):
    phi = validate_hom(q.G, q2.G, _field(obj, "phi"))
    psi = psi_from_images(q.H, q2.H, _field(obj, "psi"))
    k = read_cochain(_field(obj, "k"), hom_module(q, q2, phi))
    return validate_special_hom(q, q2, phi, psi, k)


def read_special_hom(obj):
    _kind(obj, "special_hom")
    q = read_quadruple(_field(obj, "source"))
    q2 = read_quadruple(_field(obj, "target"))
    return _hom_body(obj, q, q2)


def read_two_hom(obj):
    _kind(obj, "two_hom")
    F = read_special_hom(_field(obj, "source"))
    F2 = read_special_hom(_field(obj, "target"))
    p = read_cochain(_field(obj, "p"), F2.module)
    return validate_two_hom(F, F2, p)


def read_hom_list(obj):
    _kind(obj, "special_hom_list")
    q = read_quadruple(_field(obj, "source"))
    q2 = read_quadruple(_field(obj, "target"))
    homs = [_hom_body(h, q, q2) for h in _field(obj, "homs")]
    if len(homs) != _field(obj, "count"):
        raise FormatError("count does not match the number of homs")
    return homs


def read_two_hom_list(obj):
    _kind(obj, "two_hom_list")
    F = read_special_hom(_field(obj, "source"))
    F2 = read_special_hom(_field(obj, "target"))
    out = [validate_two_hom(F, F2, read_cochain(_field(t, "p"), F2.module))
           for t in _field(obj, "two_homs")]
    if len(out) != _field(obj, "count"):
        raise FormatError("count does not match the number of two-cells")
    return out


def hom_list_json(q, q2, homs):
    return {"kind": "special_hom_list", "source": q.to_json(), "target": q2.to_json(),
            "count": len(homs), "homs": [h.to_json(endpoints=False) for h in homs]}


def two_hom_list_json(F, F2, cells):
    return {"kind": "two_hom_list", "source": F.to_json(), "target": F2.to_json(),
            "count": len(cells), "two_homs": [t.to_json(endpoints=False) for t in cells]}


# kinds that validate without outside context
READERS = {
    "group": read_group,
    "abelian": read_abelian,
    "crossed_module": read_crossed_module,
    "strict_two_group": read_strict,
    "two_group": read_quadruple,
    "monoidal_groupoid": read_groupoid,
    "inverse_choice": read_choice,
    "special_hom": read_special_hom,
    "two_hom": read_two_hom,
    "special_hom_list": read_hom_list,
    "two_hom_list": read_two_hom_list,
}
