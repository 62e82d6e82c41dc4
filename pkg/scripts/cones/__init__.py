# CONES - Conos poliédricos racionales exactos
