"""Sender/receiver sessions in one process, plus the packet wire format.

Only the packet (t, n, c, rank) travels; the root set is session setup
shared out-of-band, since the receiver holds the factorization and can
rebuild it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import roots, transform
from .errors import FieldOutOfRange, MalformedPacket
from .transform import DivClass, Packet, Params

PACKET_FIELDS = ("t", "n", "c", "rank")
MODULUS_BOUND = 2**32
T_BOUND = 12


def serialize_packet(pkt: Packet) -> str:
    """One line of wire text: {"t":5,"n":61,"c":11,"rank":3} plus newline."""
    return json.dumps(
        {"t": pkt.t, "n": pkt.n, "c": pkt.c, "rank": pkt.rank},
        separators=(",", ":"),
    ) + "\n"


def validate_packet_fields(t: int, n: int, c: int, rank: int) -> Packet:
    """Range-check packet fields; FieldOutOfRange on any violation."""
    if not 2 <= t <= T_BOUND:
        raise FieldOutOfRange(f"t={t} outside 2..{T_BOUND}")
    if not 2 <= n < MODULUS_BOUND:
        raise FieldOutOfRange(f"n={n} outside 2..2**32-1")
    if not 0 <= c < n:
        raise FieldOutOfRange(f"c={c} outside 0..n-1")
    if not 1 <= rank <= t * t:
        raise FieldOutOfRange(f"rank={rank} outside 1..t**2={t * t}")
    return Packet(t, n, c, rank)


def parse_packet(line: str | bytes) -> Packet:
    """Inverse of serialize_packet: whitespace-tolerant, otherwise strict.

    Structural problems raise MalformedPacket (with the offending position
    when available); integer fields outside their domain raise
    FieldOutOfRange.
    """
    if isinstance(line, bytes):
        try:
            line = line.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedPacket(f"not UTF-8: {exc}") from exc
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedPacket(f"invalid packet at position {exc.pos}: {exc.msg}") from exc
    if not isinstance(obj, dict) or set(obj) != set(PACKET_FIELDS):
        raise MalformedPacket(f"packet must be one object with exactly the fields {PACKET_FIELDS}")
    for name in PACKET_FIELDS:
        if isinstance(obj[name], bool) or not isinstance(obj[name], int):
            raise MalformedPacket(f"field {name!r} must be an integer")
    return validate_packet_fields(*(obj[name] for name in PACKET_FIELDS))


@dataclass(frozen=True)
class Transcript:
    """A full encode/decode session, step by step, as each side sees it."""

    params_summary: str
    setup_note: str
    root_set: tuple[int, ...]
    alice_steps: tuple[tuple[str, object], ...]
    packet: Packet
    packet_line: str
    bob_steps: tuple[tuple[str, object], ...]
    decoded: int
    matched: bool


def run_session(params: Params, m: int) -> Transcript:
    """Encode m, push the packet through the wire format, decode it back.

    Records what each side would tabulate: the sender's sorted candidate
    list, rank and cipher; the receiver's inverse exponent (when the
    divisibility class admits one), extracted root, reconstructed list and
    decoded message.
    """
    rs = roots.root_set(params.t, params.p, params.q)
    pkt = transform.encode(m, params, rs)
    line = serialize_packet(pkt)
    received = parse_packet(line)

    alice = (
        ("message", m),
        ("candidates", transform.candidate_set(m, rs)),
        ("rank", pkt.rank),
        ("cipher", pkt.c),
    )

    bob: list[tuple[str, object]] = []
    if params.div_class is DivClass.T_EXACTLY:
        a, res = transform.inverse_exponent(params.t, params.phi)
        bob.append(("a", a))
        bob.append(("res", res))
    root = transform.extract_root(received.c, params)
    bob.append(("root", root))
    bob.append(("candidates", transform.candidate_set(root, rs)))
    decoded = transform.decode(received, params, rs)
    bob.append(("decoded", decoded))

    kind = "prime" if params.q is None else "semiprime"
    summary = (
        f"t={params.t} n={params.n} phi={params.phi} "
        f"class={params.div_class.value} kind={kind}"
    )
    note = "only the packet travels; the receiver rebuilds the root set from the private factors"
    if params.div_class is DivClass.NOT_DIVISIBLE:
        note += "; the power map is one-to-one here, so the candidate set is a single value"
    return Transcript(
        summary, note, rs.roots, alice, pkt, line, tuple(bob), decoded, decoded == m
    )
