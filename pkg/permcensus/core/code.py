# coding=utf-8
"""
Permutation Code Module

The Code container and its text file format:

    # optional comment lines
    n=<n> d=<d> s=<s>
    φ1(1) φ1(2) ... φ1(n)
    ...
    φs(1) φs(2) ... φs(n)
"""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from permcensus.core.permutation import Permutation, hamming_distance
from permcensus.utils.errors import CodeFormatError, DistanceViolationError, InvalidParameterError

_HEADER_RE = re.compile(r"^n=(\d+)\s+d=(\d+)\s+s=(\d+)$")


@dataclass(frozen=True)
class Code:
    """
    (n,d)-permutation code

    Elements are sorted lexicographically and duplicate-free, so two equal
    codes always have identical representations.
    """

    degree: int
    min_distance: int
    elements: Tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, phi: object) -> bool:
        return phi in self.elements

    @property
    def size(self) -> int:
        return len(self.elements)

    def with_element(self, phi: Permutation) -> "Code":
        """Code extended by one element known to be at distance >= d from all elements"""
        return Code(self.degree, self.min_distance, tuple(sorted(self.elements + (phi,))))


def make_code(d: int, perms: Iterable[Permutation]) -> Code:
    """
    Build a validated code from permutations

    Args:
        d: Minimum distance (2 <= d <= n)
        perms: Non-empty collection of permutations of equal degree

    Returns:
        Sorted, deduplicated Code

    Raises:
        InvalidParameterError: empty input, mixed degrees or d out of range
        DistanceViolationError: some pair is at distance < d (the pair is reported)
    """
    elements = sorted(set(perms))
    if not elements:
        raise InvalidParameterError("A permutation code must be non-empty")
    n = elements[0].degree
    if any(phi.degree != n for phi in elements):
        raise InvalidParameterError("All code elements must have the same degree")
    if not 2 <= d <= n:
        raise InvalidParameterError(f"Minimum distance d={d} outside 2..{n}")
    for a in range(len(elements)):
        for b in range(a + 1, len(elements)):
            distance = hamming_distance(elements[a], elements[b])
            if distance < d:
                raise DistanceViolationError(elements[a], elements[b], distance, d)
    return Code(n, d, tuple(elements))


def format_code(code: Code, comments: Optional[Sequence[str]] = None) -> str:
    """
    Render a code in the code file format

    Args:
        code: Code to render
        comments: Optional comment lines (written with a leading '# ')

    Returns:
        File content ending with a newline
    """
    lines = [f"# {comment}" for comment in comments or []]
    lines.append(f"n={code.degree} d={code.min_distance} s={code.size}")
    lines.extend(str(phi) for phi in code.elements)
    return "\n".join(lines) + "\n"


def parse_code(text: str, source: str = "<string>") -> Code:
    """
    Parse the code file format

    Raises:
        CodeFormatError: malformed header, wrong line count or bad images
        DistanceViolationError: the listed permutations violate d
    """
    header = None
    rows: List[Tuple[int, List[int]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            match = _HEADER_RE.match(line)
            if not match:
                raise CodeFormatError(source, f"invalid header '{line}'", number)
            header = tuple(int(g) for g in match.groups())
            continue
        try:
            rows.append((number, [int(token) for token in line.split()]))
        except ValueError:
            raise CodeFormatError(source, f"non-integer image in '{line}'", number)

    if header is None:
        raise CodeFormatError(source, "missing header line")
    n, d, s = header
    if len(rows) != s:
        raise CodeFormatError(source, f"header announces s={s} but {len(rows)} permutations follow")

    perms = []
    for number, images in rows:
        if len(images) != n:
            raise CodeFormatError(source, f"expected {n} images, got {len(images)}", number)
        try:
            perms.append(Permutation.from_images(images))
        except InvalidParameterError as e:
            raise CodeFormatError(source, e.message, number)
    code = make_code(d, perms)
    if code.size != s:
        raise CodeFormatError(source, f"duplicate permutations: {s} listed, {code.size} distinct")
    return code


def read_code_file(path: Union[str, Path]) -> Code:
    """Read a code file"""
    path = Path(path)
    if not path.exists():
        raise CodeFormatError(str(path), "file not found")
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise CodeFormatError(str(path), f"unreadable file: {e}")
    return parse_code(text, str(path))


def write_code_file(path: Union[str, Path], code: Code, comments: Optional[Sequence[str]] = None) -> Path:
    """Write a code file, creating parent directories"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_code(code, comments))
    return path
