# SEARCH - Búsqueda determinista de cámaras lisas no bordantes y familias de ejemplos
