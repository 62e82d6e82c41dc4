# GALE - Validación de F/W-matrices y dualidad de Gale entera
