"""Every algebra of size ≤ 4 up to isomorphism, computed once per session."""
from functools import lru_cache

from pseudoeq.search import SearchSpec, enumerate_models


@lru_cache(maxsize=None)
def models(max_size: int = 4) -> tuple:
    return tuple(m for n in range(1, max_size + 1) for m in enumerate_models(SearchSpec(n)))


def tables(A) -> tuple:
    return (A.meet, A.tilde, A.btilde, A.top)


def pointed(max_size: int = 4) -> list:
    """(model, point) for every point other than the top."""
    return [(A, a) for A in models(max_size) for a in range(A.n) if a != A.top]
