"""HTTP service exposing the library's decision and certification operations.

Every endpoint is stateless: requests may carry an inline basis
configuration, otherwise the app's default basis (fractional parts of prime
square roots) is used.  Machine-readable results mirror the CLI's JSON.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import wire
from .basis import IrrationalBasis, basis_from_entries, load_basis
from .circle import (PointContext, Translation, classify_en,
                     lascar_equivalent, s_relation, sd, u_eq, u_less)
from .errors import (CirclehomError, ConfigurationError, MalformedWalkError,
                     UsageError, VerificationError)
from .mtwo import cut_interval, s_prime_k
from .shells import (is_boundary, literal_representation, psi, shell_class,
                     shell_holonomy, witness_boundary)
from .simplices import boundary
from .star import star_sort
from .suite import RunConfig, run_checks
from .walks import search_walk, verify_chain_walk, walk_parameter, walk_representation


class BasisEntry(BaseModel):
    name: str
    low: str
    high: str
    refine: str = "explicit"


class PointModel(BaseModel):
    angle: str
    iota: str = "0"


class StarRequest(BaseModel):
    expr: str
    basis: Optional[list[BasisEntry]] = None


class StarResponse(BaseModel):
    values: list[str]
    display: str


class SdRequest(BaseModel):
    a: PointModel
    b: PointModel
    basis: Optional[list[BasisEntry]] = None


class SdResponse(BaseModel):
    distance: str


class ShellRequest(BaseModel):
    shell: dict
    basis: Optional[list[BasisEntry]] = None


class DecisionResponse(BaseModel):
    result: bool
    holonomy: list[str]
    class_value: str = Field(alias="class")
    lascar: bool
    certificate: Optional[dict] = None

    model_config = {"populate_by_name": True}


class ChainVerifyRequest(BaseModel):
    chain: dict
    shell: dict
    basis: Optional[list[BasisEntry]] = None


class ChainVerifyResponse(BaseModel):
    valid: bool


class WalkVerifyRequest(BaseModel):
    walk: dict
    f01: dict
    f02: dict
    basis: Optional[list[BasisEntry]] = None


class WalkVerifyResponse(BaseModel):
    valid: bool
    representation: Optional[dict] = None


class WalkSearchRequest(BaseModel):
    shell: dict
    n_max: int = 3
    basis: Optional[list[BasisEntry]] = None


class WalkSearchResponse(BaseModel):
    found: bool
    walk: Optional[dict] = None
    representation: Optional[dict] = None
    parameter: Optional[int] = None


class PsiRequest(BaseModel):
    shift: str
    iota_shift: str = "0"
    base: Optional[PointModel] = None
    basis: Optional[list[BasisEntry]] = None


class PsiResponse(BaseModel):
    class_value: str = Field(alias="class")

    model_config = {"populate_by_name": True}


class M2Request(BaseModel):
    relation: str
    points: list[PointModel]
    r: Optional[str] = None
    k: Optional[int] = None
    basis: Optional[list[BasisEntry]] = None


class M2Response(BaseModel):
    result: Any


class SuiteRequest(BaseModel):
    seed: int = 0
    n_max: int = 3
    checks: Optional[list[str]] = None
    basis: Optional[list[BasisEntry]] = None


class SuiteCheck(BaseModel):
    name: str
    passed: bool
    detail: str
    elapsed: float
    counterexample: Optional[str] = None


class SuiteResponse(BaseModel):
    passed: bool
    checks: list[SuiteCheck]


def _error_payload(kind: str, message: str) -> dict:
    return {"error": {"kind": kind, "message": message}}


def create_app(default_basis_file: Optional[str] = None,
               refinement_cap: int = 256) -> FastAPI:
    app = FastAPI(title="circlehom", version="0.1.0")

    def fresh_context(entries: Optional[list[BasisEntry]]) -> PointContext:
        if entries is not None:
            basis = basis_from_entries([e.model_dump() for e in entries],
                                       refinement_cap=refinement_cap)
        elif default_basis_file is not None:
            basis = load_basis(default_basis_file, refinement_cap=refinement_cap)
        else:
            basis = IrrationalBasis.default(refinement_cap=refinement_cap)
        return PointContext(basis)

    @app.exception_handler(CirclehomError)
    async def handle_domain_error(_, exc: CirclehomError):
        if isinstance(exc, ConfigurationError):
            kind, status = "configuration", 400
        elif isinstance(exc, UsageError):
            kind, status = "usage", 400
        elif isinstance(exc, (VerificationError, MalformedWalkError)):
            kind, status = "internal", 500
        else:
            kind, status = "error", 500
        return JSONResponse(status_code=status,
                            content=_error_payload(kind, str(exc)))

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/star", response_model=StarResponse)
    def star_eval(req: StarRequest):
        ctx = fresh_context(req.basis)
        values = wire.eval_star_expr(req.expr, ctx.basis)
        ordered = star_sort(values)
        return StarResponse(values=[wire.format_star(v) for v in ordered],
                            display=wire.format_star_set(values))

    @app.post("/sd", response_model=SdResponse)
    def sd_eval(req: SdRequest):
        ctx = fresh_context(req.basis)
        a = wire.point_from_json(req.a.model_dump(), ctx.basis)
        b = wire.point_from_json(req.b.model_dump(), ctx.basis)
        return SdResponse(distance=wire.format_star(sd(a, b)))

    @app.post("/shell/decide", response_model=DecisionResponse,
              response_model_by_alias=True)
    def shell_decide(req: ShellRequest):
        ctx = fresh_context(req.basis)
        shell = wire.shell_from_json(req.shell, ctx.basis)
        holonomy = shell_holonomy(shell)
        verdict = is_boundary(shell)
        rep = literal_representation(shell)
        certificate = None
        if verdict:
            witness = witness_boundary(shell, ctx)
            if witness is None or boundary(witness) != shell.as_chain():
                raise VerificationError("witness failed re-verification")
            certificate = wire.chain_to_json(witness)
        return DecisionResponse(
            result=verdict,
            holonomy=[wire.format_star(v) for v in star_sort(holonomy)],
            **{"class": wire.format_real(shell_class(shell).value)},
            lascar=lascar_equivalent(rep.a, rep.a_prime),
            certificate=certificate,
        )

    @app.post("/shell/witness", response_model=DecisionResponse,
              response_model_by_alias=True)
    def shell_witness(req: ShellRequest):
        return shell_decide(req)

    @app.post("/chain/verify", response_model=ChainVerifyResponse)
    def chain_verify(req: ChainVerifyRequest):
        ctx = fresh_context(req.basis)
        chain = wire.chain_from_json(req.chain, ctx.basis)
        shell = wire.shell_from_json(req.shell, ctx.basis)
        return ChainVerifyResponse(valid=boundary(chain) == shell.as_chain())

    @app.post("/walk/verify", response_model=WalkVerifyResponse)
    def walk_verify(req: WalkVerifyRequest):
        ctx = fresh_context(req.basis)
        walk = wire.walk_from_json(req.walk, ctx.basis)
        f01 = wire.edge_from_json(req.f01, ctx.basis)
        f02 = wire.edge_from_json(req.f02, ctx.basis)
        valid = verify_chain_walk(walk, f01, f02)
        representation = None
        if valid:
            try:
                representation = wire.walk_representation_to_json(
                    walk_representation(walk))
            except MalformedWalkError:
                representation = None
        return WalkVerifyResponse(valid=valid, representation=representation)

    @app.post("/walk/search", response_model=WalkSearchResponse)
    def walk_search(req: WalkSearchRequest):
        ctx = fresh_context(req.basis)
        shell = wire.shell_from_json(req.shell, ctx.basis)
        walk = search_walk(shell, req.n_max, ctx)
        if walk is None:
            return WalkSearchResponse(found=False)
        return WalkSearchResponse(
            found=True,
            walk=wire.walk_to_json(walk),
            representation=wire.walk_representation_to_json(walk_representation(walk)),
            parameter=walk_parameter(walk),
        )

    @app.post("/psi", response_model=PsiResponse, response_model_by_alias=True)
    def psi_eval(req: PsiRequest):
        ctx = fresh_context(req.basis)
        shift = wire.parse_real(req.shift, ctx.basis)
        try:
            iota_shift = Fraction(req.iota_shift)
        except ValueError as exc:
            raise UsageError(f"bad iota shift: {exc}") from exc
        t = Translation(shift, iota_shift)
        base = (wire.point_from_json(req.base.model_dump(), ctx.basis)
                if req.base is not None else ctx.point(0))
        return PsiResponse(**{"class": wire.format_real(psi(t, base).value)})

    @app.post("/m2/eval", response_model=M2Response)
    def m2_eval(req: M2Request):
        ctx = fresh_context(req.basis)
        points = [wire.point_from_json(p.model_dump(), ctx.basis) for p in req.points]
        relation = req.relation
        if relation == "s":
            if len(points) != 3:
                raise UsageError("relation 's' takes 3 points")
            return M2Response(result=s_relation(*points))
        if relation == "s_prime_k":
            if len(points) != 3 or req.k is None:
                raise UsageError("relation 's_prime_k' takes 3 points and k")
            return M2Response(result=s_prime_k(*points, req.k))
        if relation in ("u_less", "u_eq"):
            if len(points) != 2 or req.r is None:
                raise UsageError(f"relation {relation!r} takes 2 points and r")
            r = Fraction(req.r)
            fn = u_less if relation == "u_less" else u_eq
            return M2Response(result=fn(points[0], points[1], r))
        if relation == "classify_en":
            return M2Response(result=classify_en(points).value)
        if relation == "cut":
            if len(points) != 2:
                raise UsageError("relation 'cut' takes 2 points")
            kind, lo, hi = cut_interval(points[0], points[1])
            return M2Response(result={"kind": kind, "low": str(lo), "high": str(hi)})
        raise UsageError(f"unknown relation {relation!r}")

    @app.post("/suite", response_model=SuiteResponse)
    def suite_run(req: SuiteRequest):
        entries = ([e.model_dump() for e in req.basis]
                   if req.basis is not None else None)
        cfg = RunConfig(basis_file=default_basis_file, basis_entries=entries,
                        seed=req.seed, n_max=req.n_max,
                        refinement_cap=refinement_cap)
        results = run_checks(cfg, req.checks)
        checks = [SuiteCheck(name=r.name, passed=r.passed, detail=r.detail,
                             elapsed=r.elapsed, counterexample=r.counterexample)
                  for r in results]
        return SuiteResponse(passed=all(r.passed for r in results), checks=checks)

    return app


app = create_app()
