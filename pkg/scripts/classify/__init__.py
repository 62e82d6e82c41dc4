# CLASSIFY - Taxonomía de cámaras bordantes, contracciones, flips y clasificación
