"""Element model: the nine element kinds, their property schemas, and validation.

Every element is a flat string-keyed property map; geometry (x, y, z, w, h)
and visibility (display) are mandatory for all non-script kinds. Elements are
immutable after construction and property lookup is a plain dict access.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Mapping

ELEMENT_KINDS = (
    "text",
    "shape",
    "text-field",
    "button",
    "dropdown",
    "image",
    "carousel",
    "video",
    "script",
)

# Accepted spellings of the "type" property, normalized to a kind.
_TYPE_ALIASES = {kind: kind for kind in ELEMENT_KINDS}
_TYPE_ALIASES["img"] = "image"

# Canonical "type" value written on serialization. The on-disk format uses
# "img" for images; everything else matches the kind name.
CANONICAL_TYPE = {kind: kind for kind in ELEMENT_KINDS}
CANONICAL_TYPE["image"] = "img"

MANDATORY_PROPS = ("type", "x", "y", "z", "w", "h", "display")

_HEX_COLOR = re.compile(r"^#[0-9a-fA-F]{6}([0-9a-fA-F]{2})?$")
_FIT_VALUES = ("fill", "contain", "cover")
_TEXT_ALIGN_VALUES = ("left", "right", "center", "justify")
_FONT_STYLE_VALUES = ("normal", "italic", "oblique")


class ElementError(ValueError):
    """Base class for element construction failures."""


class UnknownKind(ElementError):
    def __init__(self, kind: Any):
        super().__init__(f"unknown element kind: {kind!r}")
        self.kind = kind


class MissingMandatoryProperty(ElementError):
    def __init__(self, name: str):
        super().__init__(f"missing mandatory property: {name}")
        self.name = name


class IllegalProperty(ElementError):
    def __init__(self, name: str, kind: str):
        super().__init__(f"property {name!r} is not legal for kind {kind!r}")
        self.name = name
        self.kind = kind


class BadValue(ElementError):
    def __init__(self, name: str, reason: str):
        super().__init__(f"bad value for {name!r}: {reason}")
        self.name = name
        self.reason = reason


@dataclass(frozen=True)
class PropertySchema:
    """Required and optional property names for one element kind."""

    kind: str
    required: frozenset[str]
    optional: frozenset[str]

    def legal(self) -> frozenset[str]:
        return self.required | self.optional


def _schema(kind: str, required: tuple[str, ...], optional: tuple[str, ...]) -> PropertySchema:
    return PropertySchema(kind, frozenset(required), frozenset(optional))


# Kind-specific properties on top of the mandatory set. "id" is optional for
# static elements but must be present on anything a script refers to (the
# document validator enforces that).
SCHEMAS: dict[str, PropertySchema] = {
    "text": _schema(
        "text",
        ("text",),
        ("id", "fontFamily", "textAlign", "fontSize", "color", "fontStyle", "fontWeight"),
    ),
    "shape": _schema("shape", (), ("id", "backgroundColor", "borderRadius")),
    "text-field": _schema("text-field", (), ("id", "placeholder", "backgroundColor")),
    "button": _schema("button", ("text",), ("id",)),
    "dropdown": _schema("dropdown", ("options",), ("id",)),
    "image": _schema("image", ("src",), ("id", "fit", "alt")),
    "carousel": _schema("carousel", ("srcs",), ("id",)),
    "video": _schema("video", ("src",), ("id",)),
    "script": _schema("script", ("code",), ()),
}

# Browser-neutral defaults applied by the transpiler, not stored on elements.
DEFAULT_FIT = "fill"
DEFAULT_FONT_SIZE = 16
DEFAULT_COLOR = "#000000"
DEFAULT_FONT_FAMILY = "sans-serif"


@dataclass(frozen=True)
class MamlElement:
    """One validated element: a kind plus its flat property map."""

    kind: str
    props: dict[str, Any] = field(compare=True)

    @property
    def x(self) -> float:
        return self.props["x"]

    @property
    def y(self) -> float:
        return self.props["y"]

    @property
    def z(self) -> int:
        return self.props["z"]

    @property
    def w(self) -> float:
        return self.props["w"]

    @property
    def h(self) -> float:
        return self.props["h"]

    @property
    def display(self) -> bool:
        return self.props.get("display", True)

    @property
    def id(self) -> str | None:
        return self.props.get("id")


def get_prop(el: MamlElement, name: str) -> Any:
    """O(1) property lookup; returns None for legal-but-unset optionals."""
    return el.props.get(name)


def _is_number(v: Any) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def _check_string(name: str, v: Any, non_empty: bool = False) -> None:
    if not isinstance(v, str):
        raise BadValue(name, f"expected a string, got {type(v).__name__}")
    if non_empty and not v:
        raise BadValue(name, "must not be empty")


def _check_color(name: str, v: Any) -> None:
    _check_string(name, v)
    if not _HEX_COLOR.match(v):
        raise BadValue(name, "expected #RRGGBB or #RRGGBBAA")


def _check_enum(name: str, v: Any, allowed: tuple[str, ...]) -> None:
    _check_string(name, v)
    if v not in allowed:
        raise BadValue(name, f"expected one of {', '.join(allowed)}")


def _check_url_list(name: str, v: Any) -> None:
    if not isinstance(v, list) or not v:
        raise BadValue(name, "expected a non-empty list of URL strings")
    for item in v:
        if not isinstance(item, str) or not item:
            raise BadValue(name, "list entries must be non-empty strings")


def _check_string_list(name: str, v: Any) -> None:
    if not isinstance(v, list) or not v:
        raise BadValue(name, "expected a non-empty list of strings")
    for item in v:
        if not isinstance(item, str):
            raise BadValue(name, "list entries must be strings")


def _check_value(name: str, v: Any) -> None:
    if name in ("x", "y"):
        if not _is_number(v) or v < 0:
            raise BadValue(name, "expected a number >= 0")
    elif name in ("w", "h"):
        if not _is_number(v) or v <= 0:
            raise BadValue(name, "expected a number > 0")
    elif name == "z":
        if isinstance(v, bool) or not isinstance(v, int):
            raise BadValue(name, "expected an integer")
    elif name == "display":
        if not isinstance(v, bool):
            raise BadValue(name, "expected true or false")
    elif name in ("color", "backgroundColor"):
        _check_color(name, v)
    elif name == "fit":
        _check_enum(name, v, _FIT_VALUES)
    elif name == "textAlign":
        _check_enum(name, v, _TEXT_ALIGN_VALUES)
    elif name == "fontStyle":
        _check_enum(name, v, _FONT_STYLE_VALUES)
    elif name == "fontSize":
        if not _is_number(v) or v <= 0:
            raise BadValue(name, "expected a number > 0")
    elif name == "borderRadius":
        if not _is_number(v) or v < 0:
            raise BadValue(name, "expected a number >= 0")
    elif name == "fontWeight":
        if not (isinstance(v, str) and v) and not (_is_number(v) and v > 0):
            raise BadValue(name, "expected a weight keyword or number")
    elif name in ("src",):
        _check_string(name, v, non_empty=True)
    elif name == "srcs":
        _check_url_list(name, v)
    elif name == "options":
        _check_string_list(name, v)
    elif name == "id":
        _check_string(name, v, non_empty=True)
    elif name in ("text", "alt", "placeholder", "fontFamily", "code"):
        _check_string(name, v)


def normalize_kind(type_value: Any) -> str:
    if not isinstance(type_value, str) or type_value not in _TYPE_ALIASES:
        raise UnknownKind(type_value)
    return _TYPE_ALIASES[type_value]


def make_element(kind: str, props: Mapping[str, Any]) -> MamlElement:
    """Build a validated element of `kind` from a flat property map.

    Accepts "img" as an alias for image and "objectFit" as an alias for
    "fit". `display` defaults to true when absent; all other mandatory
    properties must be supplied. Raises an ElementError subclass otherwise.
    """
    kind = normalize_kind(kind)
    schema = SCHEMAS[kind]
    out: dict[str, Any] = dict(props)

    declared = out.get("type")
    if declared is not None and normalize_kind(declared) != kind:
        raise BadValue("type", f"declared type {declared!r} does not match kind {kind!r}")
    out["type"] = CANONICAL_TYPE[kind]

    if "objectFit" in out:
        if "fit" in out and out["fit"] != out["objectFit"]:
            raise BadValue("objectFit", "conflicts with fit")
        out["fit"] = out.pop("objectFit")

    if kind == "script":
        extra = set(out) - {"type", "code"}
        if extra:
            raise IllegalProperty(sorted(extra)[0], kind)
        if "code" not in out:
            raise MissingMandatoryProperty("code")
        _check_value("code", out["code"])
        return MamlElement(kind, out)

    for name in ("x", "y", "z", "w", "h"):
        if name not in out:
            raise MissingMandatoryProperty(name)
    out.setdefault("display", True)

    legal = schema.legal() | set(MANDATORY_PROPS)
    for name in out:
        if name not in legal:
            raise IllegalProperty(name, kind)
    for name in schema.required:
        if name not in out:
            raise MissingMandatoryProperty(name)
    for name, value in out.items():
        if name != "type":
            _check_value(name, value)
    return MamlElement(kind, out)
