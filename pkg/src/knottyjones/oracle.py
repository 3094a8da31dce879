"""Jones polynomial evaluation behind a pluggable oracle interface.

The Jones polynomial of a diagram d is

    V(d) = (-A)^(-3 * writhe(d)) * <d>   with   t = A^(-4),

so an A-exponent e lands on t-exponent -e/4. For single-component
diagrams every exponent after the writhe correction is divisible by 4; a
remainder means the diagram is not a knot, reported as NonKnotExponent.

Oracles expose one method, evaluate(diagram) -> LaurentPoly(t). The
state-sum oracle computes locally; the remote stub speaks a small HTTP
protocol: POST the PD JSON to the endpoint, receive the polynomial as
{"variable": "t", "terms": [{"exp": e, "coef": "<decimal string>"}, ...]}
with terms ascending by exponent.
"""

from __future__ import annotations

from typing import Optional, Protocol, runtime_checkable

import httpx

from .bracket import StateSumBudget, kauffman_bracket, kauffman_bracket_naive
from .diagram import Diagram
from .errors import NonKnotExponent, ProtocolError, TransportError
from .laurent import LaurentPoly
from .pd import pd_to_json_obj


@runtime_checkable
class JonesOracle(Protocol):
    def evaluate(self, diagram: Diagram) -> LaurentPoly: ...


def jones_from_bracket(d: Diagram, bracket: LaurentPoly) -> LaurentPoly:
    """Writhe-normalize a bracket polynomial and substitute t = A^(-4)."""
    w = d.writhe
    poly = bracket.shift(-3 * w)
    if w & 1:
        poly = poly.scale(-1)
    terms = []
    for e, c in poly.coeffs.items():
        if e % 4:
            raise NonKnotExponent(
                f"A-exponent {e} not divisible by 4: diagram is not a knot"
            )
        terms.append((-(e // 4), c))
    return LaurentPoly("t", terms)


class StateSumOracle:
    """Local evaluation via the Gray-code Kauffman bracket."""

    def __init__(self, budget: Optional[StateSumBudget] = None):
        self.budget = budget if budget is not None else StateSumBudget()

    def evaluate(self, diagram: Diagram) -> LaurentPoly:
        return jones_from_bracket(diagram, kauffman_bracket(diagram, self.budget))


class ReferenceOracle:
    """Naive independent enumeration; slow, for cross-checking."""

    def evaluate(self, diagram: Diagram) -> LaurentPoly:
        return jones_from_bracket(diagram, kauffman_bracket_naive(diagram))


class RemoteOracle:
    """Client for a remote Jones endpoint speaking the wire protocol."""

    def __init__(self, endpoint: str, client: Optional[httpx.Client] = None, timeout: float = 30.0):
        if not endpoint.rstrip("/").endswith("/jones"):
            endpoint = endpoint.rstrip("/") + "/jones"
        self.endpoint = endpoint
        self._client = client if client is not None else httpx.Client(timeout=timeout)

    def evaluate(self, diagram: Diagram) -> LaurentPoly:
        body = pd_to_json_obj(diagram.pd_code())
        try:
            resp = self._client.post(self.endpoint, json=body)
        except httpx.HTTPError as exc:
            raise TransportError(f"oracle request failed: {exc}") from exc
        if resp.status_code != 200:
            raise TransportError(
                f"oracle endpoint returned status {resp.status_code}"
            )
        try:
            obj = resp.json()
        except ValueError as exc:
            raise ProtocolError("oracle reply is not JSON") from exc
        try:
            poly = LaurentPoly.from_json_obj(obj)
        except ValueError as exc:
            raise ProtocolError(f"malformed polynomial reply: {exc}") from exc
        if poly.variable != "t":
            raise ProtocolError(f"oracle replied in variable {poly.variable!r}, expected 't'")
        return poly


def remote_oracle_stub(endpoint: str) -> RemoteOracle:
    return RemoteOracle(endpoint)


_DEFAULT = StateSumOracle()


def jones(d: Diagram, oracle: Optional[JonesOracle] = None) -> LaurentPoly:
    return (_DEFAULT if oracle is None else oracle).evaluate(d)


def get_oracle(name: Optional[str]) -> JonesOracle:
    """Resolve an oracle spec: "state-sum", "reference", or "remote:URL"."""
    if name is None or name == "" or name == "state-sum":
        return StateSumOracle()
    if name == "reference":
        return ReferenceOracle()
    if name.startswith("remote:"):
        url = name[len("remote:"):]
        if not url:
            raise ValueError("remote oracle needs a URL, e.g. remote:http://host:8000")
        return remote_oracle_stub(url)
    raise ValueError(f"unknown oracle {name!r}")
