# -*- coding: utf-8 -*-
"""
Mapeo ordenado sobre un pool de hilos.

El resultado conserva el orden de la entrada, de modo que la salida no depende
del número de hilos configurado (GALE_THREADS).
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from core import settings

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    elementos = list(items)
    hilos = settings.THREADS if threads is None else threads
    if hilos <= 1 or len(elementos) <= 1:
        return [func(x) for x in elementos]
    with ThreadPoolExecutor(max_workers=hilos) as pool:
        return list(pool.map(func, elementos))
