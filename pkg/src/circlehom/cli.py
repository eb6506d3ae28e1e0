"""Command-line client for the service.

The CLI builds request payloads and sends them to a circlehom service: a
remote one when --url is given, otherwise the app mounted in-process over an
ASGI transport, so the same request path is exercised either way.  Machine
JSON goes to stdout, diagnostics to stderr.

Exit codes: 0 ok, 1 decision/property failure (not bounding, walk not found,
failed check), 2 usage error, 3 configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional

import httpx

from .errors import ConfigurationError, UsageError
from .service import create_app

OK, FAILURE, USAGE, CONFIG = 0, 1, 2, 3


def _load_json_arg(text: str) -> Any:
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as handle:
                return json.load(handle)
        except OSError as exc:
            raise UsageError(f"cannot read {text[1:]!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad JSON in {text[1:]!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad JSON argument: {exc}") from exc


def _basis_entries(path: Optional[str]) -> Optional[list[dict]]:
    if path is None:
        return None
    data = _load_json_arg("@" + path)
    if not isinstance(data, list):
        raise ConfigurationError("basis file must contain a JSON list")
    return data


class Client:
    """Thin HTTP client; in-process unless a remote URL is configured."""

    def __init__(self, url: Optional[str] = None):
        if url:
            self._client = httpx.Client(base_url=url, timeout=600.0)
        else:
            import warnings
            with warnings.catch_warnings():
                # environment-level starlette/httpx pairing notice
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient
            self._client = TestClient(create_app(), raise_server_exceptions=False)

    def post(self, path: str, payload: dict) -> tuple[int, Any]:
        response = self._client.post(path, json=payload)
        try:
            body = response.json()
        except json.JSONDecodeError:
            body = {"error": {"kind": "internal", "message": response.text}}
        return response.status_code, body

    def close(self) -> None:
        self._client.close()


def _emit(body: Any) -> None:
    json.dump(body, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _error_exit(body: Any) -> int:
    kind = "internal"
    if isinstance(body, dict):
        kind = body.get("error", {}).get("kind", "internal")
        message = body.get("error", {}).get("message", str(body))
    else:
        message = str(body)
    print(f"error ({kind}): {message}", file=sys.stderr)
    if kind == "usage":
        return USAGE
    if kind == "configuration":
        return CONFIG
    return FAILURE


def _add_common_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    """Global flags, accepted both before and after the subcommand.

    The per-subcommand copies use SUPPRESS defaults so they only override the
    top-level values when given explicitly."""

    def default(value):
        return {"default": argparse.SUPPRESS if suppress else value}

    parser.add_argument("--url", help="remote service URL (default: in-process)",
                        **default(None))
    parser.add_argument("--basis", help="basis configuration file (JSON)",
                        **default(None))
    parser.add_argument("--seed", type=int, help="seed for randomized suites",
                        **default(0))
    parser.add_argument("--nmax", type=int, help="walk search bound",
                        **default(3))
    parser.add_argument("--json", action="store_true",
                        help="machine output only (suppress stderr summaries)",
                        **default(False))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circlehom",
        description="Star arithmetic, circle distances, and shell boundary certificates.")
    _add_common_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("star", parents=[common], help="evaluate a star expression")
    p.add_argument("expr")

    p = sub.add_parser("sd", parents=[common],
                       help="directed distance between two point literals")
    p.add_argument("a", help='point JSON, e.g. \'{"angle": "1/2", "iota": "0"}\'')
    p.add_argument("b")

    p = sub.add_parser("shell-decide", parents=[common],
                       help="decide whether a shell bounds")
    p.add_argument("shell", help="shell JSON (or @file)")

    p = sub.add_parser("shell-witness", parents=[common],
                       help="emit a witness 2-chain for a bounding shell")
    p.add_argument("shell")

    p = sub.add_parser("chain-verify", parents=[common],
                       help="check that a 2-chain bounds a shell")
    p.add_argument("chain")
    p.add_argument("shell")

    p = sub.add_parser("walk-verify", parents=[common],
                       help="check the chain-walk conditions")
    p.add_argument("walk")
    p.add_argument("f01")
    p.add_argument("f02")

    p = sub.add_parser("walk-search", parents=[common],
                       help="bounded brute-force walk search")
    p.add_argument("shell")

    p = sub.add_parser("psi", parents=[common],
                       help="image of a translation under the epimorphism")
    p.add_argument("shift", help="angle expression, e.g. '1/3' or 'a1'")
    p.add_argument("--iota-shift", default="0")
    p.add_argument("--base", help="optional base point JSON")

    p = sub.add_parser("m2-eval", parents=[common],
                       help="evaluate an arc-length relation")
    p.add_argument("relation", choices=["s", "s_prime_k", "u_less", "u_eq",
                                        "classify_en", "cut"])
    p.add_argument("points", help="JSON list of point literals")
    p.add_argument("--r", help="rational parameter for u_less/u_eq")
    p.add_argument("--k", type=int, help="division parameter for s_prime_k")

    p = sub.add_parser("suite", parents=[common],
                       help="run property suites and acceptance criteria")
    p.add_argument("--check", action="append", dest="checks",
                   help="run only the named check (repeatable)")

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _dispatch(args: argparse.Namespace, client: Client) -> int:
    basis = _basis_entries(args.basis)

    def with_basis(payload: dict) -> dict:
        if basis is not None:
            payload["basis"] = basis
        return payload

    if args.command == "star":
        status, body = client.post("/star", with_basis({"expr": args.expr}))
        if status != 200:
            return _error_exit(body)
        _emit(body)
        if not args.json:
            print(body["display"], file=sys.stderr)
        return OK

    if args.command == "sd":
        payload = with_basis({"a": _load_json_arg(args.a), "b": _load_json_arg(args.b)})
        status, body = client.post("/sd", payload)
        if status != 200:
            return _error_exit(body)
        _emit(body)
        return OK

    if args.command in ("shell-decide", "shell-witness"):
        path = "/shell/decide" if args.command == "shell-decide" else "/shell/witness"
        payload = with_basis({"shell": _load_json_arg(args.shell)})
        status, body = client.post(path, payload)
        if status != 200:
            return _error_exit(body)
        _emit(body)
        if not args.json:
            verdict = "bounds" if body["result"] else "does not bound"
            print(f"shell {verdict}; class {body['class']}", file=sys.stderr)
        return OK if body["result"] else FAILURE

    if args.command == "chain-verify":
        payload = with_basis({"chain": _load_json_arg(args.chain),
                              "shell": _load_json_arg(args.shell)})
        status, body = client.post("/chain/verify", payload)
        if status != 200:
            return _error_exit(body)
        _emit(body)
        return OK if body["valid"] else FAILURE

    if args.command == "walk-verify":
        payload = with_basis({"walk": _load_json_arg(args.walk),
                              "f01": _load_json_arg(args.f01),
                              "f02": _load_json_arg(args.f02)})
        status, body = client.post("/walk/verify", payload)
        if status != 200:
            return _error_exit(body)
        _emit(body)
        return OK if body["valid"] else FAILURE

    if args.command == "walk-search":
        payload = with_basis({"shell": _load_json_arg(args.shell),
                              "n_max": args.nmax})
        status, body = client.post("/walk/search", payload)
        if status != 200:
            return _error_exit(body)
        _emit(body)
        if not args.json:
            note = ("walk found" if body["found"]
                    else f"no walk within bound {args.nmax}")
            print(note, file=sys.stderr)
        return OK if body["found"] else FAILURE

    if args.command == "psi":
        payload = with_basis({"shift": args.shift, "iota_shift": args.iota_shift})
        if args.base:
            payload["base"] = _load_json_arg(args.base)
        status, body = client.post("/psi", payload)
        if status != 200:
            return _error_exit(body)
        _emit(body)
        return OK

    if args.command == "m2-eval":
        payload = with_basis({"relation": args.relation,
                              "points": _load_json_arg(args.points)})
        if args.r is not None:
            payload["r"] = args.r
        if args.k is not None:
            payload["k"] = args.k
        status, body = client.post("/m2/eval", payload)
        if status != 200:
            return _error_exit(body)
        _emit(body)
        return OK

    if args.command == "suite":
        payload = {"seed": args.seed, "n_max": args.nmax}
        if args.checks:
            payload["checks"] = args.checks
        if basis is not None:
            payload["basis"] = basis
        status, body = client.post("/suite", payload)
        if status != 200:
            return _error_exit(body)
        _emit(body)
        for check in body["checks"]:
            status_word = "PASS" if check["passed"] else "FAIL"
            line = f"{status_word} {check['name']} ({check['elapsed']:.2f}s): {check['detail']}"
            if check.get("counterexample"):
                line += f" counterexample: {check['counterexample']}"
            print(line, file=sys.stderr)
        return OK if body["passed"] else FAILURE

    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag, default in (("url", None), ("basis", None), ("seed", 0),
                          ("nmax", 3), ("json", False)):
        if not hasattr(args, flag):
            setattr(args, flag, default)
    if args.command == "serve":
        import uvicorn
        app = create_app(default_basis_file=args.basis)
        uvicorn.run(app, host=args.host, port=args.port)
        return OK
    client = Client(args.url)
    try:
        return _dispatch(args, client)
    except UsageError as exc:
        print(f"error (usage): {exc}", file=sys.stderr)
        return USAGE
    except ConfigurationError as exc:
        print(f"error (configuration): {exc}", file=sys.stderr)
        return CONFIG
    finally:
        client.close()


if __name__ == "__main__":
    sys.exit(main())
