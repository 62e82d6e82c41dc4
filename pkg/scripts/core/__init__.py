# CORE - Configuración y errores compartidos
