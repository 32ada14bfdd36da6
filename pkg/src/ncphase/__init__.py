"""
ncphase - 旋转不变非对易相空间工具集

对 18 个正则生成元的 Heisenberg 代数做精确正规序计算，验证非对易代数的
全部对易关系、Jacobi 恒等式与转动不变性；并数值计算氢原子能级修正及
非对易参数的上界。
"""

# Keep this aligned with pyproject.toml [project].version.
__version__ = "0.1.0"

__author__ = "Your Name"
