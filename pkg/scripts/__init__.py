# Scripts de Gale Suite
