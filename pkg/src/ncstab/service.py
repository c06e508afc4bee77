"""Command-line interface and JSON-over-HTTP service.

Both surfaces funnel through the same handlers, so for one payload the CLI
output and the HTTP body are byte-identical.  All numbers cross the boundary
as exact "p/q" strings; a request that used the decimal polar converter is
answered with "exact": false.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import __version__
from .angles import OutsideWindow, SheetMismatch
from .chambers import locate, walk
from .classifier import (
    MultipleRowsFired,
    NoRowFired,
    SearchBudgetExceeded,
    classify,
)
from .fixtures import FIXTURES, spec_to_indexset
from .gaussian import parse_gaussian, parse_rational
from .oracle import CapExceeded, CentralCharge, cross_check
from .quiver import hom_profile, parse_object
from .stability import ChartViolation, chart_catalog, parse_point, point_json
from .symbolic import classification_json


class RequestError(ValueError):
    def __init__(self, code: str, detail: str, status: int = 400):
        self.code = code
        self.detail = detail
        self.status = status
        super().__init__(detail)


def _point_from_payload(payload: dict, key: str = "point"):
    spec = payload.get(key)
    if spec is None:
        raise RequestError("schema", f"missing {key!r} in request")
    try:
        return parse_point(spec)
    except ChartViolation as exc:
        raise RequestError("chart_violation", str(exc), status=422)
    except SheetMismatch as exc:
        raise RequestError("sheet_mismatch", str(exc), status=422)
    except (ValueError, KeyError, TypeError) as exc:
        raise RequestError("schema", str(exc))


def handle_classify(payload: dict) -> dict:
    point, exact = _point_from_payload(payload)
    return {
        "point": point_json(point),
        "exact": exact,
        "version": __version__,
        "classification": classification_json(classify(point)),
    }


def handle_locate(payload: dict) -> dict:
    point, exact = _point_from_payload(payload)
    return {
        "point": point_json(point),
        "exact": exact,
        "version": __version__,
        "location": str(locate(point)),
    }


def handle_walk(payload: dict) -> dict:
    start, exact_s = _point_from_payload(payload, "start")
    end, exact_e = _point_from_payload(payload, "end")
    steps = payload.get("steps")
    if not isinstance(steps, int) or steps < 1:
        raise RequestError("schema", "steps must be a positive integer")
    try:
        path = walk(start, end, steps)
    except ValueError as exc:
        raise RequestError("schema", str(exc))
    return {
        "start": point_json(start),
        "end": point_json(end),
        "exact": exact_s and exact_e,
        "version": __version__,
        "path": [step.json() for step in path],
    }


def handle_hom(payload: dict) -> dict:
    try:
        x = parse_object(str(payload.get("x")))
        y = parse_object(str(payload.get("y")))
    except ValueError as exc:
        raise RequestError("schema", str(exc))
    profile = hom_profile(x, y)
    return {
        "x": str(x),
        "y": str(y),
        "degree": profile.degree,
        "dim": profile.dimension,
        "exact": True,
        "version": __version__,
    }


def handle_verify(payload: dict) -> dict:
    charge_spec = payload.get("charge")
    if not isinstance(charge_spec, dict):
        raise RequestError("schema", "verify needs charge {x, z, y}")
    try:
        charge = CentralCharge(
            parse_gaussian(charge_spec["x"]),
            parse_gaussian(charge_spec["z"]),
            parse_gaussian(charge_spec["y"]),
        )
    except (KeyError, ValueError) as exc:
        raise RequestError("schema", str(exc))
    bound = payload.get("bound", 3)
    cap = payload.get("cap", 12)
    if not isinstance(bound, int) or bound < 0:
        raise RequestError("schema", "bound must be a nonnegative integer")
    try:
        report = cross_check(charge, bound, cap)
    except ValueError as exc:
        raise RequestError("schema", str(exc), status=422)
    except CapExceeded as exc:
        raise RequestError("cap_exceeded", str(exc), status=422)
    mismatches = sum(1 for e in report if "note" in e)
    return {
        "exact": True,
        "version": __version__,
        "report": report,
        "mismatches": mismatches,
    }


def handle_charts(_payload: dict | None = None) -> dict:
    return {
        "exact": True,
        "version": __version__,
        "families": chart_catalog(),
    }


HANDLERS = {
    "classify": handle_classify,
    "locate": handle_locate,
    "walk": handle_walk,
    "hom": handle_hom,
    "verify": handle_verify,
    "charts": handle_charts,
}

_BUG_SENTINELS = (NoRowFired, MultipleRowsFired, AssertionError)
_INPUT_ERRORS = (SearchBudgetExceeded, OutsideWindow, CapExceeded)


def dispatch(command: str, payload: dict) -> tuple[int, dict]:
    """(http status, response body); shared by the CLI and the server."""
    handler = HANDLERS.get(command)
    if handler is None:
        return 404, {"error": {"code": "unknown_command", "detail": command}}
    try:
        return 200, handler(payload)
    except RequestError as exc:
        return exc.status, {"error": {"code": exc.code, "detail": exc.detail}}
    except _INPUT_ERRORS as exc:
        return 422, {"error": {"code": "computation", "detail": str(exc)}}
    except _BUG_SENTINELS as exc:
        return 500, {"error": {"code": "internal", "detail": str(exc)}}


def render(body: dict, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(body, indent=2, sort_keys=True)
    return json.dumps(body, separators=(",", ":"), sort_keys=True)


class _Handler(BaseHTTPRequestHandler):
    server_version = f"ncstab/{__version__}"

    def _send(self, status: int, body: dict):
        data = render(body).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def do_GET(self):
        if self.path.rstrip("/") == "/charts":
            self._send(*dispatch("charts", {}))
        else:
            self._send(404, {"error": {"code": "not_found", "detail": self.path}})

    def do_POST(self):
        command = self.path.strip("/")
        length = int(self.headers.get("Content-Length", 0))
        raw = self.rfile.read(length) if length else b"{}"
        try:
            payload = json.loads(raw or b"{}")
        except json.JSONDecodeError as exc:
            self._send(400, {"error": {"code": "schema", "detail": str(exc)}})
            return
        if not isinstance(payload, dict):
            self._send(400, {"error": {"code": "schema", "detail": "body must be an object"}})
            return
        self._send(*dispatch(command, payload))

    def log_message(self, fmt, *args):  # tests stay quiet
        pass


def serve(port: int, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    server = ThreadingHTTPServer((host, port), _Handler)
    return server


def run_fixture_suite() -> tuple[int, list[str]]:
    """Classify every stored fixture; returns (failures, report lines)."""
    from .chambers import locate as _locate
    from .symbolic import CurveSet, DerivedSet

    lines = []
    failures = 0
    for fx in FIXTURES:
        point = fx.point()
        got = classify(point)
        want_c0 = CurveSet(spec_to_indexset(fx.alpha), spec_to_indexset(fx.beta))
        want_dp = DerivedSet(spec_to_indexset(fx.da), spec_to_indexset(fx.db),
                             fx.m, fx.mp)
        loc = str(_locate(point))
        row = got.witnesses["row"].split(":")[-1]
        ok = (
            got.c0_ss == want_c0
            and got.derived_ss == want_dp
            and got.c1_s == fx.c1s
            and got.c1_ss == fx.c1ss
            and loc == fx.location
            and row == fx.row
        )
        failures += 0 if ok else 1
        lines.append(
            f"{'ok  ' if ok else 'FAIL'} {fx.name:22s} {fx.family:8s} row={row:4s} "
            f"loc={loc:16s} c0={got.c0_ss.cardinality()} "
            f"dp={got.derived_ss.cardinality()}"
        )
    return failures, lines


def _read_payload(args) -> dict:
    if args.point_file:
        with open(args.point_file) as fh:
            spec = json.load(fh)
    else:
        spec = json.loads(args.point)
    if "point" in spec or "start" in spec:
        return spec
    return {"point": spec}


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="ncstab",
        description="Exact stable-curve classifier for the triangular quiver's "
                    "stability manifold",
    )
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    parser.add_argument("--json", action="store_true",
                        help="compact JSON output (the default)")
    sub = parser.add_subparsers(dest="command")

    p_classify = sub.add_parser("classify", help="classify a stability point")
    p_locate = sub.add_parser("locate", help="chamber location of a point")
    for p in (p_classify, p_locate):
        p.add_argument("--point", help="inline point JSON")
        p.add_argument("--point-file", help="file with point JSON")

    p_walk = sub.add_parser("walk", help="walk between two points of one chart")
    p_walk.add_argument("--request", required=True,
                        help='JSON {"start": ..., "end": ..., "steps": n}')

    p_hom = sub.add_parser("hom", help="hom profile between two objects")
    p_hom.add_argument("x")
    p_hom.add_argument("y")

    p_verify = sub.add_parser("verify", help="oracle cross-check on the heart")
    p_verify.add_argument("--charge", required=True,
                          help='comma-separated Z(S_x),Z(S_z),Z(S_y), e.g. "i,3i,2i"')
    p_verify.add_argument("--bound", type=int, default=3)
    p_verify.add_argument("--cap", type=int, default=12)

    sub.add_parser("charts", help="list the eight chart families")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int,
                         default=int(os.environ.get("NCSTAB_PORT", "8471")))
    p_serve.add_argument("--host", default="127.0.0.1")

    parser.add_argument("--fixture-suite", action="store_true",
                        help="run the stored table fixtures and print coverage")

    args = parser.parse_args(argv)

    if args.fixture_suite:
        failures, lines = run_fixture_suite()
        print("\n".join(lines))
        print(f"{len(lines) - failures}/{len(lines)} fixtures pass")
        return 0 if failures == 0 else 1

    if args.command is None:
        parser.print_help()
        return 1

    if args.command == "serve":
        server = serve(args.port, args.host)
        print(f"listening on http://{args.host}:{args.port}", file=sys.stderr)
        try:
            server.serve_forever()
        except KeyboardInterrupt:
            pass
        finally:
            server.server_close()
        return 0

    if args.command in ("classify", "locate"):
        if not (args.point or args.point_file):
            print(render({"error": {"code": "schema",
                                    "detail": "--point or --point-file required"}}))
            return 1
        payload = _read_payload(args)
    elif args.command == "walk":
        payload = json.loads(args.request)
    elif args.command == "hom":
        payload = {"x": args.x, "y": args.y}
    elif args.command == "verify":
        parts = [p.strip() for p in args.charge.split(",")]
        if len(parts) != 3:
            print(render({"error": {"code": "schema",
                                    "detail": "charge needs three components"}}))
            return 1
        payload = {
            "charge": {k: _parse_compact_complex(v)
                       for k, v in zip(("x", "z", "y"), parts)},
            "bound": args.bound,
            "cap": args.cap,
        }
    else:  # charts
        payload = {}

    status, body = dispatch(args.command, payload)
    print(render(body, args.pretty))
    if status == 200:
        return 0
    if "error" in body and body["error"]["code"] == "internal":
        return 2
    return 1


def _parse_compact_complex(text: str) -> dict:
    """Literals like "i", "3i", "2+i", "-1/2-3i" into {re, im} strings."""
    t = text.replace(" ", "")
    if not t:
        raise ValueError("empty charge component")
    re_part, im_part = "0", "0"
    if "i" not in t:
        re_part = t
    else:
        body = t[:-1]
        # split off the real part at the last +/- that is not inside a fraction
        split = None
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "+-/":
                split = k
                break
        if split is None:
            re_part, im_body = "0", body
        else:
            re_part, im_body = body[:split], body[split:]
        if im_body in ("", "+"):
            im_part = "1"
        elif im_body == "-":
            im_part = "-1"
        else:
            im_part = im_body
    parse_rational(re_part), parse_rational(im_part)  # validate
    return {"re": re_part, "im": im_part}


if __name__ == "__main__":
    raise SystemExit(main())
