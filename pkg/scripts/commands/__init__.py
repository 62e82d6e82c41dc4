# COMMANDS - Consola, formatos de archivo, reportes JSON, reproducción y exportación
