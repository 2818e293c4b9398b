"""Text file formats: choice tables, consideration tables, and models.

All three formats are line-oriented, comment-friendly (``#`` to end of
line), and canonical: printing emits menus in ascending set encoding,
and parse-then-print is the identity on canonical text.

Choice file::

    ground: w x y z
    wx -> x          # menus concatenated when all labels are single chars
    wy -> w
    ...

Correspondence file: same shape with ``=>`` and a submenu on the right.

Model file: a ``model:`` header naming one of ``limited-attention``,
``shortlist``, ``list``, ``cer``; a ``ground:`` line; then the sections
the model needs (``order:``, ``gamma:``, ``partial:``, ``list:``,
``tournament:``, ``conspicuity:``, ``ref <z>:``). Order-valued sections
list alternatives best first; for ``list:`` that means the alternative
examined last comes first.
"""

from __future__ import annotations

import re

from .core import (
    ChoiceCorrespondence,
    ChoiceFunction,
    GroundSet,
    LinearOrder,
    Relation,
    bits_of,
)
from .errors import ParseError
from .forward import CerModel, FilterOrder, ListTournament, Model, Shortlist

_SECTION_RE = re.compile(
    r"^(model|ground|order|gamma|partial|list|tournament|conspicuity|ref\s+\S+)\s*:\s*(.*)$"
)


def _strip(line: str) -> str:
    if "#" in line:
        line = line[: line.index("#")]
    return line.strip()


def _single_char_labels(ground: GroundSet) -> bool:
    return all(len(lab) == 1 for lab in ground.labels)


def _parse_menu(ground: GroundSet, text: str, line_no: int) -> int:
    tokens = text.split()
    if len(tokens) == 1 and tokens[0] not in ground.labels and _single_char_labels(ground):
        tokens = list(tokens[0])
    mask = 0
    for tok in tokens:
        try:
            bit = 1 << ground.index(tok)
        except ValueError as exc:
            raise ParseError(str(exc), line_no) from None
        if mask & bit:
            raise ParseError(f"alternative {tok!r} listed twice in one menu", line_no)
        mask |= bit
    if not mask:
        raise ParseError("empty menu", line_no)
    return mask


def _format_menu(ground: GroundSet, mask: int) -> str:
    labs = ground.labels_of(mask)
    return "".join(labs) if _single_char_labels(ground) else " ".join(labs)


def _parse_ground(value: str, line_no: int) -> GroundSet:
    labels = value.split()
    try:
        return GroundSet(tuple(labels))
    except ValueError as exc:
        raise ParseError(str(exc), line_no) from None


def _scan_table_lines(text: str, arrow: str):
    """Yield (line_no, lhs, rhs) for table lines; ground line comes first."""
    ground: GroundSet | None = None
    ground_line = -1
    rows: list[tuple[int, str, str]] = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("ground:"):
            if ground is not None:
                raise ParseError("duplicate ground line", no)
            ground = _parse_ground(line[len("ground:"):], no)
            ground_line = no
            continue
        if arrow not in line:
            raise ParseError(f"expected '<menu> {arrow} <choice>'", no)
        if ground is None:
            raise ParseError("table line before the ground line", no)
        lhs, _, rhs = line.partition(arrow)
        rows.append((no, lhs.strip(), rhs.strip()))
    if ground is None:
        raise ParseError("missing 'ground:' header")
    return ground, ground_line, rows


def parse_choice_file(text: str) -> ChoiceFunction:
    """Parse a choice table; every menu of size >= 2 must appear once."""
    ground, _, rows = _scan_table_lines(text, "->")
    size = 1 << ground.n
    choices = [-1] * size
    for i in range(ground.n):
        choices[1 << i] = i
    seen: set[int] = set()
    for no, lhs, rhs in rows:
        mask = _parse_menu(ground, lhs, no)
        if mask.bit_count() < 2:
            raise ParseError("menus of size one are implicit; drop this line", no)
        if mask in seen:
            raise ParseError(f"menu {_format_menu(ground, mask)} listed twice", no)
        seen.add(mask)
        chosen = _parse_menu(ground, rhs, no)
        if chosen.bit_count() != 1:
            raise ParseError("exactly one chosen alternative expected", no)
        if chosen & ~mask:
            raise ParseError("chosen alternative is not in the menu", no)
        choices[mask] = chosen.bit_length() - 1
    missing = [m for m in range(1, size) if m.bit_count() >= 2 and m not in seen]
    if missing:
        names = ", ".join(_format_menu(ground, m) for m in missing[:4])
        more = "" if len(missing) <= 4 else f" (+{len(missing) - 4} more)"
        raise ParseError(f"choice table is not total; missing menus: {names}{more}")
    return ChoiceFunction(ground, tuple(choices))


def print_choice_file(c: ChoiceFunction) -> str:
    lines = ["ground: " + " ".join(c.ground.labels)]
    for mask in c.menus(min_size=2):
        lines.append(
            f"{_format_menu(c.ground, mask)} -> {c.ground.labels[c.choices[mask]]}"
        )
    return "\n".join(lines) + "\n"


def parse_corr_file(text: str) -> ChoiceCorrespondence:
    """Parse a consideration table; singleton menus are implicit."""
    ground, _, rows = _scan_table_lines(text, "=>")
    size = 1 << ground.n
    images = [0] * size
    for i in range(ground.n):
        images[1 << i] = 1 << i
    seen: set[int] = set()
    for no, lhs, rhs in rows:
        mask = _parse_menu(ground, lhs, no)
        if mask.bit_count() < 2:
            raise ParseError("menus of size one are implicit; drop this line", no)
        if mask in seen:
            raise ParseError(f"menu {_format_menu(ground, mask)} listed twice", no)
        seen.add(mask)
        image = _parse_menu(ground, rhs, no)
        if image & ~mask:
            raise ParseError("image is not a submenu of the menu", no)
        images[mask] = image
    missing = [m for m in range(1, size) if m.bit_count() >= 2 and m not in seen]
    if missing:
        names = ", ".join(_format_menu(ground, m) for m in missing[:4])
        more = "" if len(missing) <= 4 else f" (+{len(missing) - 4} more)"
        raise ParseError(f"consideration table is not total; missing menus: {names}{more}")
    return ChoiceCorrespondence(ground, tuple(images))


def print_corr_file(corr: ChoiceCorrespondence) -> str:
    lines = ["ground: " + " ".join(corr.ground.labels)]
    for mask in corr.menus(min_size=2):
        lines.append(
            f"{_format_menu(corr.ground, mask)} => {_format_menu(corr.ground, corr.images[mask])}"
        )
    return "\n".join(lines) + "\n"


_MODEL_SECTIONS = {
    "limited-attention": {"order", "gamma"},
    "shortlist": {"order", "partial"},
    "list": {"list", "tournament"},
    "cer": {"conspicuity"},  # plus one ref section per alternative
}


def _split_sections(text: str) -> list[tuple[int, str, list[tuple[int, str]]]]:
    sections: list[tuple[int, str, list[tuple[int, str]]]] = []
    current: list[tuple[int, str]] | None = None
    for no, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        match = _SECTION_RE.match(line)
        if match:
            name = re.sub(r"\s+", " ", match.group(1))
            current = []
            if match.group(2).strip():
                current.append((no, match.group(2).strip()))
            sections.append((no, name, current))
        else:
            if current is None:
                raise ParseError("content before any section header", no)
            current.append((no, line))
    return sections


def _parse_order(ground: GroundSet, body: list[tuple[int, str]], header_no: int) -> LinearOrder:
    if not body:
        raise ParseError("empty order section", header_no)
    tokens: list[str] = []
    for _, chunk in body:
        tokens.extend(chunk.split())
    no = body[0][0]
    try:
        order = LinearOrder.from_labels(ground, tokens)
    except ValueError as exc:
        raise ParseError(str(exc), no) from None
    return order


def parse_model_file(text: str) -> Model:
    """Parse a model file into a simulatable model value."""
    sections = _split_sections(text)
    by_name: dict[str, tuple[int, list[tuple[int, str]]]] = {}
    for no, name, body in sections:
        if name in by_name:
            raise ParseError(f"duplicate section {name!r}", no)
        by_name[name] = (no, body)

    if "model" not in by_name:
        raise ParseError("missing 'model:' header")
    model_no, model_body = by_name["model"]
    if len(model_body) != 1 or model_body[0][1] not in _MODEL_SECTIONS:
        raise ParseError(
            f"model must be one of {sorted(_MODEL_SECTIONS)}", model_no
        )
    kind = model_body[0][1]
    if "ground" not in by_name:
        raise ParseError("missing 'ground:' line")
    ground_no, ground_body = by_name["ground"]
    ground = _parse_ground(" ".join(chunk for _, chunk in ground_body), ground_no)

    def need(name: str) -> tuple[int, list[tuple[int, str]]]:
        if name not in by_name:
            raise ParseError(f"model {kind!r} needs a {name!r} section", model_no)
        return by_name[name]

    if kind == "limited-attention":
        order_no, order_body = need("order")
        order = _parse_order(ground, order_body, order_no)
        no, body = need("gamma")
        corr_text = "ground: " + " ".join(ground.labels) + "\n" + "\n".join(
            chunk for _, chunk in body
        )
        try:
            corr = parse_corr_file(corr_text)
        except ParseError as exc:
            raise ParseError(f"in gamma section: {exc}", no) from None
        return FilterOrder(corr, order)

    if kind == "shortlist":
        order_no, order_body = need("order")
        order = _parse_order(ground, order_body, order_no)
        no, body = need("partial")
        pairs: list[tuple[int, int]] = []
        for line_no, chunk in body:
            m = re.match(r"^(\S+)\s*>\s*(\S+)$", chunk)
            if not m:
                raise ParseError("expected 'a > b'", line_no)
            try:
                pairs.append((ground.index(m.group(1)), ground.index(m.group(2))))
            except ValueError as exc:
                raise ParseError(str(exc), line_no) from None
        try:
            dominance = Relation.from_pairs(ground, pairs)
        except ValueError as exc:
            raise ParseError(str(exc), no) from None
        return Shortlist(dominance, order)

    if kind == "list":
        list_no, list_body = need("list")
        list_order = _parse_order(ground, list_body, list_no)
        no, body = need("tournament")
        rows = [0] * ground.n
        seen_pairs: set[int] = set()
        for line_no, chunk in body:
            if "->" not in chunk:
                raise ParseError("expected '<pair> -> <winner>'", line_no)
            lhs, _, rhs = chunk.partition("->")
            mask = _parse_menu(ground, lhs.strip(), line_no)
            if mask.bit_count() != 2:
                raise ParseError("tournament lines need two-element menus", line_no)
            if mask in seen_pairs:
                raise ParseError("pair listed twice in tournament", line_no)
            seen_pairs.add(mask)
            win = _parse_menu(ground, rhs.strip(), line_no)
            if win.bit_count() != 1 or win & ~mask:
                raise ParseError("winner must be one member of the pair", line_no)
            w = win.bit_length() - 1
            rows[w] |= mask ^ win
        try:
            tournament = Relation(ground, tuple(rows))
            return ListTournament(list_order, tournament)
        except ValueError as exc:
            raise ParseError(str(exc), no) from None

    # cer
    consp_no, consp_body = need("conspicuity")
    conspicuity = _parse_order(ground, consp_body, consp_no)
    references: list[LinearOrder | None] = [None] * ground.n
    for name, (no, body) in by_name.items():
        if not name.startswith("ref "):
            continue
        label = name[4:]
        try:
            idx = ground.index(label)
        except ValueError as exc:
            raise ParseError(str(exc), no) from None
        references[idx] = _parse_order(ground, body, no)
    missing = [ground.labels[i] for i, r in enumerate(references) if r is None]
    if missing:
        raise ParseError(f"cer model needs one 'ref <z>:' section per alternative; missing {missing}")
    return CerModel(conspicuity, tuple(references))  # type: ignore[arg-type]


def print_model_file(model: Model) -> str:
    """Canonical model text; parses back to an equal model."""
    lines: list[str] = []
    if isinstance(model, FilterOrder):
        ground = model.gamma.ground
        lines.append("model: limited-attention")
        lines.append("ground: " + " ".join(ground.labels))
        lines.append("order: " + " ".join(model.order.label_ranking()))
        lines.append("gamma:")
        for mask in ground.menus(min_size=2):
            lines.append(
                f"{_format_menu(ground, mask)} => {_format_menu(ground, model.gamma.images[mask])}"
            )
    elif isinstance(model, Shortlist):
        ground = model.order.ground
        lines.append("model: shortlist")
        lines.append("ground: " + " ".join(ground.labels))
        lines.append("order: " + " ".join(model.order.label_ranking()))
        lines.append("partial:")
        for i, j in model.dominance.pairs():
            lines.append(f"{ground.labels[i]} > {ground.labels[j]}")
    elif isinstance(model, ListTournament):
        ground = model.list_order.ground
        lines.append("model: list")
        lines.append("ground: " + " ".join(ground.labels))
        lines.append("list: " + " ".join(model.list_order.label_ranking()))
        lines.append("tournament:")
        for mask in ground.menus(min_size=2):
            if mask.bit_count() != 2:
                continue
            a, b = tuple(bits_of(mask))
            w = a if model.tournament.has(a, b) else b
            lines.append(f"{_format_menu(ground, mask)} -> {ground.labels[w]}")
    elif isinstance(model, CerModel):
        ground = model.conspicuity.ground
        lines.append("model: cer")
        lines.append("ground: " + " ".join(ground.labels))
        lines.append("conspicuity: " + " ".join(model.conspicuity.label_ranking()))
        for i, ref in enumerate(model.references):
            lines.append(f"ref {ground.labels[i]}: " + " ".join(ref.label_ranking()))
    else:
        raise TypeError(f"unknown model {model!r}")
    return "\n".join(lines) + "\n"
