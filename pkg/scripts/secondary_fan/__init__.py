# SECONDARY_FAN - Cono móvil, cámaras GKZ y abanicos proyectivos
