"""HTTP surface: every suite is a POST endpoint returning its JSON report.

The CLI is a thin client of this app (in-process by default, over HTTP when
pointed at a running server via ``cohfin serve``).
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import suites
from .ramsey import InfeasibleError, RamseyError
from .spaces import SpaceError
from .words import WordError

app = FastAPI(
    title="cohfin",
    description="Law suites and witness searches over finite coherent "
                "spaces, bounded duals, and Ramsey extractions.",
)


class SpaceRequest(BaseModel):
    expr: str = Field(examples=["dual(tensor(complete(2), discrete(3)))"])


class LawsRequest(BaseModel):
    max_n: int = 5
    m: int = 1
    k: int = 1
    seed: int = 0
    cases: int = 100


class RamseyUpperRequest(BaseModel):
    sizes: list[int]


class RamseyExactRequest(BaseModel):
    sizes: list[int]
    budget: int = 6


class RamseyFindRequest(BaseModel):
    sizes: list[int]
    n: int
    seed: int = 0
    colors: int = 2


class FunctorRequest(BaseModel):
    cases: int = 100
    seed: int = 0
    k: int = 2


class BangRequest(BaseModel):
    n_max: int = 8
    degree: int = 4


class PresentedRequest(BaseModel):
    family: str = "blocks_kn"
    blocks: int = 6
    depth: int = 50


class NonuniformRequest(BaseModel):
    k: int = 2
    max_n: int = 4
    seed: int = 0
    cases: int = 50
    s: int = 3


class WordModel(BaseModel):
    prefix: str
    period: str


class Prop21Request(BaseModel):
    first: list[WordModel]
    second: list[WordModel]


def _run(fn, *args, **kwargs) -> dict:
    try:
        return fn(*args, **kwargs)
    except (SpaceError, RamseyError, WordError, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/space")
def space(req: SpaceRequest) -> dict:
    return _run(suites.space_info, req.expr)


@app.post("/laws")
def laws(req: LawsRequest) -> dict:
    return _run(suites.laws_suite, req.max_n, req.m, req.k, req.seed,
                req.cases)


@app.post("/ramsey/upper")
def ramsey_upper(req: RamseyUpperRequest) -> dict:
    return _run(suites.ramsey_upper_info, req.sizes)


@app.post("/ramsey/exact")
def ramsey_exact(req: RamseyExactRequest) -> dict:
    try:
        return suites.ramsey_exact_suite(req.sizes, req.budget)
    except InfeasibleError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except RamseyError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.post("/ramsey/find")
def ramsey_find(req: RamseyFindRequest) -> dict:
    return _run(suites.ramsey_find_suite, req.sizes, req.n, req.seed,
                req.colors)


@app.post("/functor")
def functor(req: FunctorRequest) -> dict:
    return _run(suites.functor_suite, req.cases, req.seed, req.k)


@app.post("/bang")
def bang(req: BangRequest) -> dict:
    return _run(suites.bang_suite, req.n_max, req.degree)


@app.post("/presented")
def presented(req: PresentedRequest) -> dict:
    return _run(suites.presented_suite, req.family, req.blocks, req.depth)


@app.post("/nonuniform")
def nonuniform(req: NonuniformRequest) -> dict:
    return _run(suites.nonuniform_suite, req.k, req.max_n, req.seed,
                req.cases, req.s)


@app.post("/prop21")
def prop21(req: Prop21Request) -> dict:
    return _run(suites.prop21_suite,
                [w.model_dump() for w in req.first],
                [w.model_dump() for w in req.second])
