"""Document model and whole-document validation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .model import MamlElement


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding, ordered and stable across runs."""

    code: str
    message: str
    severity: str = "error"  # "error" | "warning"
    element_index: int | None = None
    prop: str | None = None
    line: int | None = None

    def render(self, filename: str = "<input>") -> str:
        line = self.line if self.line is not None else 0
        return f"{filename}:{line}: {self.severity}: {self.code}: {self.message}"


@dataclass(frozen=True)
class MamlDocument:
    """An ordered, immutable sequence of elements plus the design viewport width."""

    viewport_width: int
    elements: tuple[MamlElement, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))

    @property
    def script(self) -> MamlElement | None:
        for el in self.elements:
            if el.kind == "script":
                return el
        return None

    def visible_elements(self) -> Iterator[MamlElement]:
        return (el for el in self.elements if el.kind != "script")

    def ids(self) -> dict[str, int]:
        """First-occurrence index of every id in the document."""
        out: dict[str, int] = {}
        for i, el in enumerate(self.elements):
            eid = el.props.get("id")
            if isinstance(eid, str) and eid not in out:
                out[eid] = i
        return out


def validate_document(doc: MamlDocument) -> list[Diagnostic]:
    """Check document-level invariants; element-level ones are enforced at
    construction. Returns an empty list iff the document is valid.

    Checks: positive viewport width, at most one script element placed last,
    unique ids, and (when a script is present) that it parses and that every
    id it references resolves to an element of a suitable kind.
    """
    diags: list[Diagnostic] = []

    if doc.viewport_width <= 0:
        diags.append(Diagnostic("BadViewport", f"viewport_width must be > 0, got {doc.viewport_width}"))

    script_indexes = [i for i, el in enumerate(doc.elements) if el.kind == "script"]
    if len(script_indexes) > 1:
        for i in script_indexes[1:]:
            diags.append(Diagnostic("MultipleScripts", "at most one script element is allowed", element_index=i))
    if script_indexes and script_indexes[0] != len(doc.elements) - 1 and len(script_indexes) == 1:
        diags.append(
            Diagnostic(
                "ScriptNotLast",
                "the script element must be the final element",
                element_index=script_indexes[0],
            )
        )

    seen: dict[str, int] = {}
    for i, el in enumerate(doc.elements):
        eid = el.props.get("id")
        if not isinstance(eid, str):
            continue
        if eid in seen:
            diags.append(
                Diagnostic("DuplicateId", f'duplicate id "{eid}"', element_index=i, prop="id")
            )
        else:
            seen[eid] = i

    script = doc.script
    if script is not None:
        from . import script as mamlscript

        try:
            ast = mamlscript.parse_script(script.props["code"])
        except mamlscript.ScriptError as exc:
            diags.append(
                Diagnostic(
                    "ScriptError",
                    str(exc),
                    element_index=doc.elements.index(script),
                    prop="code",
                )
            )
        else:
            diags.extend(mamlscript.check_script(ast, doc))

    return diags
