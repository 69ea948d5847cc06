"""
Testes do projeto Reserve Meet
"""
