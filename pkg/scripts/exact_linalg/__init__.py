# EXACT_LINALG - Álgebra lineal entera y racional exacta
