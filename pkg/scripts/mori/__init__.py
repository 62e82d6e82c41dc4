# MORI - Colecciones primitivas, relaciones, clases numéricas y cono de Mori
