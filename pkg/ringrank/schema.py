# -*- coding: utf-8 -*-
"""A module containing the JSON surface: job documents and reports.

A job document is a JSON object whose "kind" is "order", "finring" or
"construction". Integers may be given as numbers or as decimal strings. In
reports, lattice indices, conductor indices and ring sizes are decimal
strings, and small counts are numbers unless they reach 2^63.

Classes:
    JobSpec: A parsed and validated job document.

Functions:
    load_job: Parse a job document.
    dump_job: Return the document of a parsed job.
    construct: Build a named construction.
    build_job: Build the order or finite ring a job describes.
    dump_order: Return the job document of an order.
    dump_finring: Return the job document of a finite ring.
    dump_construction: Return the job document of a built construction.
    report_order: Analyze an order and return its report document.
    report_finring: Analyze a finite ring and return its report document.
    report_error: Return the report document of a failed job.
    render: Serialize a document deterministically.
"""

from __future__ import absolute_import
from __future__ import unicode_literals

from typing import (  # noqa: F401 pylint: disable=unused-import
    Any,
    Callable,
    Dict,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)
import datetime
import json
import logging

from . import config
from .constructions import (
    build_axs,
    build_cor43,
    build_cor43_semigroup,
    build_cyclic,
    build_matson,
    build_pullback,
    build_semigroup_trunc,
    build_trunc_poly,
)
from .errors import RingRankError, SchemaError, SizeCapExceeded
from .finring import (
    ELEMENTWISE,
    IDEALWISE,
    FinRing,
    finring_from_table,
    length,
    maximal_ideals,
    nilpotency_index,
    rank_fin_exhaustive,
)
from .invariants import RankInterval, RankReport, rank_order, tangent_dimension
from .latcore import IntMat, Lattice
from .orders import (
    EmbeddedOrder,
    ideal_norm,
    ideal_pow,
    order_from_poly,
    order_from_table,
    suborder_from_lattice,
)
from .records import Record


__all__ = (
    "JOB_KINDS",
    "CONSTRUCTIONS",
    "JobSpec",
    "load_job",
    "dump_job",
    "construct",
    "build_job",
    "dump_order",
    "dump_finring",
    "dump_construction",
    "report_order",
    "report_finring",
    "report_error",
    "render",
)

logger = logging.getLogger(__name__)

JOB_KINDS = ("order", "finring", "construction")

_SMALL_LIMIT = 2 ** 63


class JobSpec(Record):
    """A validated job document.

    Order jobs set minpoly or table and optionally suborder_basis; finite
    ring jobs set divisors, table and one; construction jobs set name and
    args, plus x or primes for the constructions that need them.
    """

    kind: str
    ring_id: str
    minpoly: Tuple[int, ...] = None
    table: Tuple = None
    suborder_basis: Tuple = None
    divisors: Tuple[int, ...] = None
    one: Tuple[int, ...] = None
    name: str = None
    args: Tuple[int, ...] = None
    x: int = None
    primes: Tuple[int, ...] = None
    max_ring_size: int = None


def _to_int(value, field):
    # type: (Any, str) -> int
    """Return an integer given as a JSON number or a decimal string."""
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise SchemaError("{} must be an integer, not {!r}.".format(field, value))


def _to_tensor(value, depth, field):
    # type: (Any, int, str) -> Any
    """Return nested tuples of integers with the given nesting depth."""
    if depth == 0:
        return _to_int(value, field)
    if not isinstance(value, list):
        raise SchemaError(
            "{} must be a list nested {} deep, not {!r}.".format(
                field, depth, value
            )
        )
    return tuple(_to_tensor(item, depth - 1, field) for item in value)


def _optional(document, key, depth):
    # type: (Dict[str, Any], str, int) -> Any
    if key not in document or document[key] is None:
        return None
    return _to_tensor(document[key], depth, key)


def load_job(source):
    # type: (Union[str, Dict[str, Any]]) -> JobSpec
    """Parse and validate a job document.

    Args:
        source: The JSON text of the document, or the decoded object.

    Raises:
        SchemaError: Raised when the text is not JSON or the document does
            not match the schema of its kind.

    >>> job = load_job('{"kind": "construction", "name": "cyclic",'
    ...                ' "args": [8]}')
    >>> job.args
    (8,)
    """
    if isinstance(source, str):
        try:
            document = json.loads(source)
        except ValueError as exc:
            raise SchemaError("The job is not valid JSON: {}".format(exc))
    else:
        document = source
    if not isinstance(document, dict):
        raise SchemaError("A job must be a JSON object.")
    kind = document.get("kind")
    if kind not in JOB_KINDS:
        raise SchemaError(
            "The job kind must be one of {}, not {!r}.".format(
                ", ".join(JOB_KINDS), kind
            )
        )
    caps = document.get("caps") or {}
    if not isinstance(caps, dict):
        raise SchemaError("caps must be a JSON object.")
    cap = caps.get("max_ring_size")
    fields = dict(
        kind=kind,
        ring_id=str(document.get("id") or document.get("name") or kind),
        max_ring_size=None if cap is None else _to_int(cap, "max_ring_size"),
    )
    if kind == "order":
        normalization = document.get("normalization", "ambient")
        if normalization != "ambient":
            raise SchemaError(
                "Only the ambient normalization is supported, not "
                "{!r}.".format(normalization)
            )
        fields.update(
            minpoly=_optional(document, "minpoly", 1),
            table=_optional(document, "table", 3),
            suborder_basis=_optional(document, "suborder_basis", 2),
        )
        if (fields["minpoly"] is None) == (fields["table"] is None):
            raise SchemaError(
                "An order job needs exactly one of minpoly and table."
            )
    elif kind == "finring":
        fields.update(
            divisors=_optional(document, "divisors", 1),
            table=_optional(document, "table", 3),
            one=_optional(document, "one", 1),
        )
        missing = [
            k for k in ("divisors", "table", "one") if fields[k] is None
        ]
        if missing:
            raise SchemaError(
                "A finring job is missing {}.".format(", ".join(missing))
            )
    else:
        name = document.get("name")
        if name not in CONSTRUCTIONS:
            raise SchemaError(
                "Unknown construction {!r}; choose from {}.".format(
                    name, ", ".join(sorted(CONSTRUCTIONS))
                )
            )
        x = document.get("x")
        fields.update(
            name=name,
            args=_optional(document, "args", 1) or (),
            x=None if x is None else _to_int(x, "x"),
            primes=_optional(document, "primes", 1),
        )
    return JobSpec(**fields)


def dump_job(job):
    # type: (JobSpec) -> Dict[str, Any]
    """Return the JSON document of a parsed job."""
    document = {"kind": job.kind}  # type: Dict[str, Any]
    for key in (
        "minpoly",
        "table",
        "suborder_basis",
        "divisors",
        "one",
        "name",
        "args",
        "x",
        "primes",
    ):
        value = getattr(job, key)
        if value is not None:
            document[key] = _to_lists(value)
    if job.kind == "order":
        document["normalization"] = "ambient"
    if job.max_ring_size is not None:
        document["caps"] = {"max_ring_size": job.max_ring_size}
    return document


def _to_lists(value):
    # type: (Any) -> Any
    if isinstance(value, tuple):
        return [_to_lists(item) for item in value]
    return value


def _positional(name, builder, count):
    # type: (str, Callable[..., Any], int) -> Callable[..., Any]
    """Wrap a builder that takes exactly count integer arguments."""

    def build(args, x, primes):
        if len(args) != count:
            raise SchemaError(
                "{} takes {} arguments, got {}.".format(name, count, len(args))
            )
        return builder(*args)

    return build


def _axs_poly(args, x, primes):
    # type: (Sequence[int], Optional[int], Any) -> EmbeddedOrder
    if x is None:
        raise SchemaError("axs-poly needs the x option.")
    return build_axs(order_from_poly(args), x)


def _pullback_poly(args, x, primes):
    # type: (Sequence[int], Any, Optional[Sequence[int]]) -> EmbeddedOrder
    if not primes:
        raise SchemaError("pullback-poly needs the primes option.")
    return build_pullback(order_from_poly(args), primes)


CONSTRUCTIONS = {
    "axs-poly": _axs_poly,
    "matson": _positional("matson", build_matson, 1),
    "pullback-poly": _pullback_poly,
    "cor43": _positional("cor43", build_cor43, 1),
    "cor43-semigroup": _positional(
        "cor43-semigroup", build_cor43_semigroup, 2
    ),
    "trunc-poly": _positional("trunc-poly", build_trunc_poly, 3),
    "semigroup-trunc": _positional(
        "semigroup-trunc", build_semigroup_trunc, 3
    ),
    "cyclic": _positional("cyclic", build_cyclic, 1),
}  # type: Dict[str, Callable[..., Union[EmbeddedOrder, FinRing]]]


def construct(name, args, x=None, primes=None):
    # type: (str, Sequence[int], Optional[int], Optional[Sequence[int]]) -> Any
    """Build a named construction.

    Returns:
        An EmbeddedOrder for axs-poly, matson and pullback-poly, and a
        FinRing for the others.

    Raises:
        SchemaError: Raised for an unknown name or a wrong argument count.
    """
    try:
        builder = CONSTRUCTIONS[name]
    except KeyError:
        raise SchemaError(
            "Unknown construction {!r}; choose from {}.".format(
                name, ", ".join(sorted(CONSTRUCTIONS))
            )
        )
    logger.debug("building %s%s", name, tuple(args))
    return builder(list(args), x, primes)


def build_job(job):
    # type: (JobSpec) -> Union[EmbeddedOrder, FinRing]
    """Return the order or finite ring that a job describes.

    An order job without suborder_basis describes the ambient order itself,
    which is then normal.

    Raises:
        InputError: Raised when the data does not define a valid object.
    """
    if job.kind == "construction":
        return construct(job.name, job.args, job.x, job.primes)
    if job.kind == "finring":
        return finring_from_table(job.divisors, job.table, job.one)
    if job.minpoly is not None:
        ambient = order_from_poly(job.minpoly)
    else:
        ambient = order_from_table(job.table)
    if job.suborder_basis is None:
        lattice = ambient.full_lattice()
    else:
        rows = job.suborder_basis
        if len(rows) != ambient.degree:
            raise SchemaError(
                "suborder_basis needs {} rows, got {}.".format(
                    ambient.degree, len(rows)
                )
            )
        lattice = Lattice(IntMat.from_columns(rows, ambient.degree))
    return suborder_from_lattice(ambient, lattice)


def _small(value):
    # type: (int) -> Union[int, str]
    return value if abs(value) < _SMALL_LIMIT else str(value)


def _columns(lattice):
    # type: (Lattice) -> List[List[str]]
    return [[str(c) for c in column] for column in lattice.columns]


def dump_order(embedded):
    # type: (EmbeddedOrder) -> Dict[str, Any]
    """Return the order job document of an embedded order.

    The ambient order is written as its table and the suborder as the rows
    of its Hermite basis, one basis vector per row.
    """
    return {
        "kind": "order",
        "table": _to_lists(embedded.ambient.table),
        "suborder_basis": _to_lists(embedded.lattice.columns),
        "normalization": "ambient",
    }


def dump_finring(ring):
    # type: (FinRing) -> Dict[str, Any]
    """Return the finring job document of a finite ring."""
    return {
        "kind": "finring",
        "divisors": list(ring.divisors),
        "table": _to_lists(ring.table),
        "one": list(ring.one),
    }


def dump_construction(built):
    # type: (Union[EmbeddedOrder, FinRing]) -> Dict[str, Any]
    """Return the job document of a built construction."""
    if isinstance(built, FinRing):
        return dump_finring(built)
    return dump_order(built)


def _rank_document(rank):
    # type: (Union[int, RankInterval]) -> Any
    if isinstance(rank, RankInterval):
        return {"interval": [rank.low, rank.high]}
    return _small(rank)


def _tangent_checks(embedded, report, cap):
    # type: (EmbeddedOrder, RankReport, int) -> List[Dict[str, Any]]
    """Return the dim P/P^2 cross-checks run inside the finite ring R/P^2."""
    checks = []
    for local in report.singular_primes:
        check = {
            "name": "tangent-space",
            "p": _small(local.prime.p),
            "expected": _small(local.z),
        }  # type: Dict[str, Any]
        size = ideal_norm(ideal_pow(local.prime.ideal, 2))
        if size > cap:
            check.update(skipped="|R/P^2| = {} exceeds {}".format(size, cap))
        else:
            actual = tangent_dimension(embedded.order, local.prime)
            check.update(actual=_small(actual), passed=actual == local.z)
        checks.append(check)
    return checks


def report_order(embedded, ring_id="order", cap=None):
    # type: (EmbeddedOrder, str, Optional[int]) -> Dict[str, Any]
    """Analyze an order and return its report document.

    Raises:
        ComputationError: Raised when the rank cannot be computed.
    """
    cap = config.max_ring_size(cap)
    report = rank_order(embedded, ring_id=ring_id)
    witness = None
    if report.witness is not None:
        witness = {
            "p": _small(report.witness_prime.p),
            "f": _small(report.witness_prime.f),
            "local_generators": _small(report.witness_mu),
            "index": str(report.witness.norm),
            "basis": _columns(report.witness.lat),
        }
    return {
        "kind": "order-report",
        "ring_id": report.ring_id,
        "degree": report.degree,
        "normal": report.normal,
        "index_in_normalization": str(embedded.index),
        "conductor_index": str(report.conductor_index),
        "rank": _rank_document(report.rank),
        "exact": report.is_exact(),
        "singular_primes": [
            {
                "p": _small(local.prime.p),
                "f": _small(local.prime.f),
                "z": _small(local.z),
                "e": _small(local.e),
                "hilbert": [_small(v) for v in local.hilbert],
            }
            for local in report.singular_primes
        ],
        "witness": witness,
        "checks": _tangent_checks(embedded, report, cap),
        "notes": list(report.notes),
    }


def report_finring(ring, ring_id="finring", cap=None):
    # type: (FinRing, str, Optional[int]) -> Dict[str, Any]
    """Analyze a finite ring and return its report document.

    The rank is computed by exhaustive search when |R| is within the cap and
    reported as null otherwise. Elementwise nilpotency uses its own cap.
    """
    cap = config.max_ring_size(cap)
    notes = []  # type: List[str]
    document = {
        "kind": "finring-report",
        "ring_id": ring_id,
        "size": str(ring.size),
        "divisors": [_small(d) for d in ring.divisors],
    }  # type: Dict[str, Any]
    if ring.is_zero_ring():
        document.update(
            maximal_ideals=[],
            length=0,
            is_field=False,
            nilpotency={ELEMENTWISE: None, IDEALWISE: None},
            rank=0,
            notes=["the zero ring has rank 0"],
        )
        return document
    nilpotency = {
        IDEALWISE: nilpotency_index(ring, IDEALWISE)
    }  # type: Dict[str, Any]
    try:
        nilpotency[ELEMENTWISE] = nilpotency_index(ring, ELEMENTWISE)
    except SizeCapExceeded as exc:
        nilpotency[ELEMENTWISE] = None
        notes.append(str(exc))
    try:
        rank = _small(rank_fin_exhaustive(ring, cap))  # type: Any
    except SizeCapExceeded as exc:
        rank = None
        notes.append(str(exc))
    document.update(
        maximal_ideals=[
            {
                "p": _small(m.p),
                "f": _small(m.f),
                "residue_size": str(m.residue_size),
                "basis": _columns(m.ideal.lat),
            }
            for m in maximal_ideals(ring)
        ],
        length=_small(length(ring)),
        is_field=ring.is_field(),
        nilpotency=nilpotency,
        rank=rank,
        notes=notes,
    )
    return document


def report_error(ring_id, exc):
    # type: (str, RingRankError) -> Dict[str, Any]
    """Return the report document of a job that raised."""
    return {
        "kind": "error",
        "ring_id": ring_id,
        "error": {
            "type": type(exc).__name__,
            "message": str(exc),
            "exit_code": exc.exit_code,
        },
    }


def render(document, deterministic=False):
    # type: (Dict[str, Any], bool) -> str
    """Serialize a report with sorted keys, stamping it unless deterministic.

    >>> render({"rank": 2}, deterministic=True)
    '{\\n  "rank": 2\\n}\\n'
    """
    document = dict(document)
    if not deterministic:
        document["generated_at"] = (
            datetime.datetime.now(datetime.timezone.utc)
            .replace(microsecond=0)
            .isoformat()
        )
    return json.dumps(document, indent=2, sort_keys=True) + "\n"
