"""
物理层 - 氢原子、辅助振子、能级修正与参数上界
"""
