"""Reading label lists and writing or reading trees as text."""

import csv
import io
import json

from ._conf import INPUT_FORMATS, RENDER_FORMATS
from ._exceptions import MalformedInput
from ._tree import LEAF, Node, fold_tree

_KEYWORDS = ("leaf", "node")
_DELIMITERS = '()"'


def _decode(data):
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as e:
            prefix = data[: e.start].decode("utf-8")
            line, column = _position(prefix, len(prefix))
            raise MalformedInput(line, column, "input is not valid UTF-8")
    return data


def _position(text, index):
    """1-based line and column of text[index]."""
    line = text.count("\n", 0, index) + 1
    column = index - text.rfind("\n", 0, index)
    return line, column


def _validate_format(format, formats):
    if format not in formats:
        raise ValueError(
            "format must be one of %s, not %r" % (", ".join(formats), format)
        )


def parse_input(data, format="lines"):
    """
    Read labels from text or bytes.

    Empty input gives no labels; an empty label anywhere else raises
    MalformedInput.

    - data: UTF-8 str or bytes
    - format: "lines" for one label per line, trailing newline optional, or
        "csv-row" for one comma separated row with csv quoting
    """
    _validate_format(format, INPUT_FORMATS)
    text = _decode(data)
    if text.endswith("\n"):
        text = text[:-1]
    if text.endswith("\r"):
        text = text[:-1]
    if not text:
        return []
    if format == "lines":
        labels = []
        for number, line in enumerate(text.split("\n"), 1):
            line = line[:-1] if line.endswith("\r") else line
            if not line:
                raise MalformedInput(number, 1, "empty label")
            labels.append(line)
        return labels
    return _parse_row(text)


def _field_starts(text):
    """Offsets at which the fields of a csv row begin."""
    starts = [0]
    quoted = False
    for index, char in enumerate(text):
        if char == '"':
            quoted = not quoted
        elif char == "," and not quoted:
            starts.append(index + 1)
    return starts


def _parse_row(text):
    reader = csv.reader(io.StringIO(text), strict=True)
    try:
        row = next(reader)
        row_lines = reader.line_num
        extra = next(reader, None)
    except csv.Error as e:
        raise MalformedInput(reader.line_num, 1, "bad csv row: %s" % e)
    if extra is not None:
        raise MalformedInput(row_lines + 1, 1, "expected a single row")
    if not row:
        raise MalformedInput(1, 1, "empty field")
    for field, start in zip(row, _field_starts(text)):
        if not field:
            line, column = _position(text, start)
            raise MalformedInput(line, column, "empty field")
    return row


def _sexpr_label(label):
    text = str(label)
    if (
        not text
        or text in _KEYWORDS
        or any(c.isspace() or c in _DELIMITERS for c in text)
    ):
        return json.dumps(text, ensure_ascii=False)
    return text


def _json_label(label):
    return json.dumps(str(label), ensure_ascii=False)


def _render_dot(t):
    lines = ["digraph tree {"]
    edges = []
    number = 0
    # (tree, number of its parent)
    stack = [(t, None)]
    while stack:
        tree, parent = stack.pop()
        if tree.is_leaf:
            continue
        lines.append("  n%s [label=%s];" % (number, _json_label(tree.label)))
        if parent is not None:
            edges.append("  n%s -> n%s;" % (parent, number))
        stack.append((tree.right, number))
        stack.append((tree.left, number))
        number += 1
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines)


def render_tree(t, format="sexpr"):
    """
    Render a tree as text.

    sexpr: leaf | (node <left> <label> <right>)
    json: null | {"l":<left>,"x":"<label>","r":<right>}
    dot: digraph, nodes numbered in preorder, leaves omitted

    Labels are written as their str(); no trailing newline.
    """
    _validate_format(format, RENDER_FORMATS)
    if format == "sexpr":
        return fold_tree(
            t,
            "leaf",
            lambda left, label, right: "(node %s %s %s)"
            % (left, _sexpr_label(label), right),
        )
    if format == "json":
        return fold_tree(
            t,
            "null",
            lambda left, label, right: '{"l":%s,"x":%s,"r":%s}'
            % (left, _json_label(label), right),
        )
    return _render_dot(t)


def _sexpr_tokens(text):
    """Yield (kind, value, index) with kind one of open, close, atom, string."""
    decoder = json.JSONDecoder()
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c == "(":
            yield "open", c, i
            i += 1
        elif c == ")":
            yield "close", c, i
            i += 1
        elif c == '"':
            try:
                value, end = decoder.raw_decode(text, i)
            except json.JSONDecodeError as e:
                raise MalformedInput(e.lineno, e.colno, e.msg)
            yield "string", value, i
            i = end
        else:
            start = i
            while i < len(text) and not (
                text[i].isspace() or text[i] in _DELIMITERS
            ):
                i += 1
            yield "atom", text[start:i], start


def _parse_sexpr(text):
    # every open frame collects "node", left, label, right before its ")"
    stack = []
    done = []

    def emit(tree):
        if stack:
            stack[-1].append(tree)
        else:
            done.append(tree)

    for kind, value, index in _sexpr_tokens(text):
        line, column = _position(text, index)
        if done:
            raise MalformedInput(line, column, "trailing input")
        slot = len(stack[-1]) if stack else 1
        if slot in (1, 3):
            if kind == "open":
                stack.append([])
            elif kind == "atom" and value == "leaf":
                emit(LEAF)
            else:
                raise MalformedInput(line, column, "expected a tree")
        elif slot == 0:
            if kind != "atom" or value != "node":
                raise MalformedInput(line, column, "expected 'node'")
            stack[-1].append(value)
        elif slot == 2:
            if kind == "string" or (kind == "atom" and value not in _KEYWORDS):
                stack[-1].append(value)
            else:
                raise MalformedInput(line, column, "expected a label")
        elif kind == "close":
            _, left, label, right = stack.pop()
            emit(Node(left, label, right))
        else:
            raise MalformedInput(line, column, "expected ')'")
    if stack or not done:
        line, column = _position(text, len(text))
        raise MalformedInput(line, column, "unexpected end of input")
    return done[0]


def _parse_json(text):
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(e.lineno, e.colno, e.msg)
    results = []
    # (value, visited)
    stack = [(document, False)]
    while stack:
        value, visited = stack.pop()
        if value is None:
            results.append(LEAF)
        elif not isinstance(value, dict) or set(value) != {"l", "x", "r"}:
            raise MalformedInput(1, 1, "expected null or an object with l, x, r")
        elif not isinstance(value["x"], str):
            raise MalformedInput(1, 1, "label must be a string")
        elif visited:
            right = results.pop()
            left = results.pop()
            results.append(Node(left, value["x"], right))
        else:
            stack.append((value, True))
            stack.append((value["r"], False))
            stack.append((value["l"], False))
    return results[0]


def parse_tree(text, format="sexpr"):
    """
    Read a tree written by render_tree.

    Labels come back as strings. Only sexpr and json can be read.
    """
    if format not in ("sexpr", "json"):
        raise ValueError("format must be sexpr or json, not %r" % format)
    text = _decode(text)
    if format == "sexpr":
        return _parse_sexpr(text)
    return _parse_json(text)
