# -*- coding: utf-8 -*-
"""
Generador pseudoaleatorio por contador, divisible en flujos independientes.

Cada extracción es una función pura de (semilla, flujo, contador), de modo que
el candidato k de una búsqueda no depende del orden de evaluación ni del
número de hilos. El algoritmo completo está escrito en docs/PRNG.md.
"""

from dataclasses import dataclass
from typing import List, Sequence, TypeVar

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15

T = TypeVar("T")


def mix64(z: int) -> int:
    """Finalizador de 64 bits: dos rondas xor-shift-multiplicación."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def draw(seed: int, stream: int, counter: int) -> int:
    """Valor de 64 bits número ``counter`` del flujo ``stream``."""
    clave = mix64((seed & MASK64) ^ mix64((stream * GAMMA) & MASK64))
    return mix64((clave + (counter + 1) * GAMMA) & MASK64)


@dataclass
class CounterRNG:
    seed: int
    stream: int = 0
    counter: int = 0

    def next_u64(self) -> int:
        valor = draw(self.seed, self.stream, self.counter)
        self.counter += 1
        return valor

    def randint(self, low: int, high: int) -> int:
        """Entero uniforme en [low, high], sin sesgo (rechazo)."""
        if high < low:
            raise ValueError(f"Intervalo vacío: [{low}, {high}]")
        amplitud = high - low + 1
        limite = (1 << 64) - ((1 << 64) % amplitud)
        while True:
            x = self.next_u64()
            if x < limite:
                return low + x % amplitud

    def sample_sorted(self, population: int, k: int) -> List[int]:
        """k índices distintos de range(population), ordenados (Fisher-Yates parcial)."""
        if k > population:
            raise ValueError(f"No se pueden elegir {k} de {population}")
        indices = list(range(population))
        for i in range(k):
            j = self.randint(i, population - 1)
            indices[i], indices[j] = indices[j], indices[i]
        return sorted(indices[:k])

    def choice(self, items: Sequence[T]) -> T:
        return items[self.randint(0, len(items) - 1)]

    def split(self, stream: int) -> "CounterRNG":
        """Flujo independiente con la misma semilla."""
        return CounterRNG(seed=self.seed, stream=stream)
