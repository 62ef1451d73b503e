"""Cart double-pendulum dynamics kernels (machine-generated).

Generated by tools/generate_cart_dynamics.py -- do not edit by hand.
Variable order for derivative arrays: (phi1, phi2, dphi1, dphi2, u, m1, m2, c).
``geom`` is the tuple (L1, L2, w1, w2, offset, s1, s2, gravity).
"""

import math

import numpy as np


def cart_accel(phi1, phi2, dphi1, dphi2, u, m1, m2, c, geom):
    L1, L2, w1, w2, off, s1, s2, grav = geom
    t0 = L2**2
    t1 = L1**2
    t2 = m1*t1
    t3 = t0*t2
    t4 = w2**2
    t5 = t2*t4
    t6 = w1**2
    t7 = m1*t6
    t8 = t0*t7
    t9 = t4*t7
    t10 = m2*t0
    t11 = off*t10
    t12 = 48*t11
    t13 = math.sin(phi1)
    t14 = t13**2
    t15 = L1*t14
    t16 = math.cos(phi1)
    t17 = t16**2
    t18 = L1*t17
    t19 = m2*t4
    t20 = off*t19
    t21 = 48*t20
    t22 = 12*t0
    t23 = m2*t1
    t24 = t14*t23
    t25 = t17*t22
    t26 = 12*t4
    t27 = t17*t26
    t28 = s1**2
    t29 = m1*t28
    t30 = t14*t29
    t31 = t22*t30
    t32 = t25*t29
    t33 = off**2
    t34 = 48*t33
    t35 = t14*t34
    t36 = t17*t34
    t37 = t26*t30
    t38 = t17*t29
    t39 = t26*t38
    t40 = phi1 + phi2
    t41 = math.sin(t40)
    t42 = t41**2
    t43 = s2**2
    t44 = 12*t43
    t45 = t2*t44
    t46 = t42*t45
    t47 = math.cos(t40)
    t48 = t47**2
    t49 = t45*t48
    t50 = t44*t7
    t51 = t42*t50
    t52 = t48*t50
    t53 = m2*t43
    t54 = t48*t53
    t55 = 576*off
    t56 = t15*t55
    t57 = t42*t53
    t58 = t18*t55
    t59 = 144*t43
    t60 = t48*t59
    t61 = t42*t59
    t62 = t17*t61
    t63 = t30*t61
    t64 = t30*t60
    t65 = t38*t61
    t66 = t38*t60
    t67 = 576*t33
    t68 = t14*t67
    t69 = t17*t67
    t70 = t41*t47
    t71 = t53*t70
    t72 = t13*t16
    t73 = L1*t72
    t74 = 1152*off
    t75 = t73*t74
    t76 = t23*t72
    t77 = 288*t43*t70
    t78 = t33*t72
    t79 = 1152*t78
    t80 = 12*c
    t81 = dphi1*t0
    t82 = t4*t80
    t83 = grav*t13
    t84 = L1*m2
    t85 = t22*t84
    t86 = t16*u
    t87 = t22*t86
    t88 = t26*t83
    t89 = t26*t86
    t90 = m1*s1
    t91 = c*dphi2
    t92 = 288*off
    t93 = t13*t92
    t94 = s2*t41
    t95 = t93*t94
    t96 = s2*t47
    t97 = t16*t92
    t98 = t96*t97
    t99 = c*dphi1
    t100 = t61*t86
    t101 = t83*t90
    t102 = t60*t90
    t103 = t13*t84
    t104 = dphi2*t81
    t105 = 24*t13
    t106 = dphi1*dphi2
    t107 = t106*t96
    t108 = m2*t16
    t109 = 48*off
    t110 = t104*t94
    t111 = t106*t94
    t112 = dphi1**2
    t113 = t112*t96
    t114 = t13*t85
    t115 = dphi2**2
    t116 = t115*t96
    t117 = t47**3
    t118 = s2**3
    t119 = t106*t118
    t120 = 288*t119
    t121 = t41**3
    t122 = t103*t26
    t123 = t112*t94
    t124 = 24*t16
    t125 = t123*t124
    t126 = t115*t94
    t127 = t124*t126
    t128 = t119*t55
    t129 = t112*t118
    t130 = t117*t129
    t131 = 144*t84
    t132 = t13*t131
    t133 = t115*t118
    t134 = t117*t133
    t135 = t121*t129
    t136 = m2*t97
    t137 = t121*t133
    t138 = t42*t47
    t139 = t55*t73
    t140 = t41*t48
    t141 = t132*t138
    t142 = t136*t140
    t143 = t67*t72
    t144 = t112*t71
    t145 = t59*t70
    t146 = m2**2
    t147 = t0*t146
    t148 = t109*t147
    t149 = t146*t4
    t150 = t109*t149
    t151 = t1*t146
    t152 = t14*t151
    t153 = t146*t43
    t154 = t153*t48
    t155 = t153*t42
    t156 = t153*t70
    t157 = t151*t72
    t158 = dphi2*t80
    t159 = 144*t91
    t160 = 24*off*t83
    t161 = 24*off*t86
    t162 = m2*t91
    t163 = grav*t94
    t164 = 12*m2
    t165 = t163*t164
    t166 = t96*u
    t167 = t164*t166
    t168 = t13*t94
    t169 = 288*t84*t91
    t170 = t16*t96
    t171 = m2*t99
    t172 = m2*t92
    t173 = t172*t90
    t174 = L1**3
    t175 = t123*t16
    t176 = 144*t163
    t177 = m2*t176
    t178 = 144*t166
    t179 = m2*t178
    t180 = L1*t146
    t181 = t180*t55
    t182 = t151*t17
    t183 = t146*t96
    t184 = off*t105*t113
    t185 = m2*t184
    t186 = t13*t183
    t187 = t175*t180
    t188 = t126*t16*t180
    t189 = t16*t180
    t190 = off*t105*t116
    t191 = t13*t146
    t192 = 144*t16*t180
    t193 = t13**3
    t194 = t16**3
    t195 = 144*t123*t174
    t196 = t146*t93
    t197 = off**3
    t198 = 1152*t112
    t199 = t197*t198
    t200 = t123*t194
    t201 = t113*t193
    t202 = 1728*t33
    t203 = 864*off
    t204 = 288*t157*t43
    t205 = t140*t192
    t206 = t138*t196
    t207 = t106*t156
    t208 = t156*t198
    t209 = t115*t156
    return np.array([(144*L1*c*dphi2*s2*t13*t41 + 144*L1*c*dphi2*s2*t16*t47 + 24*L1*dphi1*dphi2*m2*s2*t0*t16*t41 + 24*L1*dphi1*dphi2*m2*s2*t16*t4*t41 + 288*L1*dphi1*dphi2*m2*t118*t121*t16 + 288*L1*dphi1*dphi2*m2*t118*t16*t41*t48 + 144*L1*grav*m2*t16*t41*t43*t47 + 576*L1*m2*off*t112*t13*t16*t43*t48 + 576*L1*m2*off*t112*t14*t41*t43*t47 + 12*L1*m2*s2*t0*t112*t16*t41 + 12*L1*m2*s2*t0*t115*t16*t41 + 12*L1*m2*s2*t112*t16*t4*t41 + 12*L1*m2*s2*t115*t16*t4*t41 + 144*L1*m2*t112*t118*t121*t16 + 144*L1*m2*t112*t118*t16*t41*t48 + 144*L1*m2*t115*t118*t121*t16 + 144*L1*m2*t115*t118*t16*t41*t48 + 144*L1*m2*t13*t41*t43*t47*u - L1*t105*t107*t19 + 12*c*dphi2*t0 + 12*c*dphi2*t4 + 144*c*dphi2*t42*t43 + 144*c*dphi2*t43*t48 + 48*dphi1*dphi2*m2*off*s2*t0*t13*t47 + 48*dphi1*dphi2*m2*off*s2*t13*t4*t47 + 576*dphi1*dphi2*m2*off*t117*t118*t13 + 576*dphi1*dphi2*m2*off*t118*t13*t42*t47 - dphi1*t82 + 24*grav*m2*off*t0*t13 + 24*grav*m2*off*t13*t4 + 288*grav*m2*off*t13*t43*t48 - grav*t71*t97 + 24*m2*off*s2*t0*t112*t13*t47 + 24*m2*off*s2*t0*t115*t13*t47 + 24*m2*off*s2*t112*t13*t4*t47 + 24*m2*off*s2*t115*t13*t4*t47 + 24*m2*off*t0*t16*u + 288*m2*off*t112*t117*t118*t13 + 288*m2*off*t112*t118*t13*t42*t47 + 288*m2*off*t115*t117*t118*t13 + 288*m2*off*t115*t118*t13*t42*t47 + 24*m2*off*t16*t4*u + 288*m2*off*t16*t42*t43*u + 144*m2*t1*t112*t13*t16*t42*t43 + 144*m2*t1*t112*t17*t41*t43*t47 + 576*m2*t112*t13*t16*t33*t42*t43 + 576*m2*t112*t17*t33*t41*t43*t47 - t100*t84 - t100*t90 - t101*t61 - t102*t83 - t102*t86 - 24*t103*t104*t96 - t103*t117*t120 - t103*t120*t138 - t108*t109*t110 - t108*t121*t128 - t108*t128*t140 - t11*t125 - t11*t127 - t111*t16*t21 - t112*t139*t57 - t112*t143*t54 - t112*t145*t24 - t112*t60*t76 - t113*t114 - t113*t122 - t114*t116 - t116*t122 - t125*t20 - t127*t20 - t129*t141 - t129*t142 - t130*t132 - t132*t134 - t133*t141 - t133*t142 - t135*t136 - t136*t137 - t144*t58 - t144*t68 - t22*t83*t90 - t60*t83*t84 - t60*t99 - t61*t99 - t71*t93*u - t80*t81 - t83*t85 - t84*t87 - t84*t88 - t84*t89 - t87*t90 - t88*t90 - t89*t90 - t91*t95 - t91*t98)/(t10*t35 + t10*t36 - t12*t15 - t12*t18 - t15*t21 - t18*t21 + t19*t35 + t19*t36 + t22*t24 + t23*t25 + t23*t27 + t23*t62 + t24*t26 + t24*t60 + t3 + t31 + t32 + t37 + t39 + t46 + t49 + t5 + t51 + t52 - t54*t56 + t54*t68 - t57*t58 + t57*t69 + t63 + t64 + t65 + t66 + t71*t75 - t71*t79 - t76*t77 + t8 + t9), (144*L1*c*dphi1*m2*s2*t13*t41 + 144*L1*c*dphi1*m2*s2*t16*t47 + 576*L1*c*dphi2*m2*off*t14 + 576*L1*c*dphi2*m2*off*t17 + 1152*L1*dphi1*dphi2*off*t13*t146*t16*t42*t43 + 1152*L1*dphi1*dphi2*off*t146*t17*t41*t43*t47 + 24*L1*dphi1*dphi2*s2*t0*t13*t146*t47 + 24*L1*dphi1*dphi2*s2*t13*t146*t4*t47 + 288*L1*dphi1*dphi2*t117*t118*t13*t146 + 288*L1*dphi1*dphi2*t118*t13*t146*t42*t47 + 144*L1*grav*m1*m2*s1*s2*t13*t16*t47 + 144*L1*grav*m1*m2*s1*s2*t14*t41 + 576*L1*grav*off*s2*t146*t17*t41 + 12*L1*grav*t0*t13*t146 + 12*L1*grav*t13*t146*t4 + 144*L1*grav*t13*t146*t43*t48 + 144*L1*m1*m2*s1*s2*t13*t16*t41*u + 144*L1*m1*m2*s1*s2*t17*t47*u + 144*L1*m1*m2*s2*t112*t13*t17*t28*t47 + 12*L1*m1*m2*s2*t112*t13*t47*t6 + 144*L1*m1*m2*s2*t112*t193*t28*t47 + 576*L1*off*s2*t14*t146*t47*u + 1152*L1*off*t112*t13*t146*t16*t42*t43 + 1152*L1*off*t112*t146*t17*t41*t43*t47 + 576*L1*off*t115*t13*t146*t16*t42*t43 + 576*L1*off*t115*t146*t17*t41*t43*t47 + 12*L1*s2*t0*t112*t13*t146*t47 + 12*L1*s2*t0*t115*t13*t146*t47 + 1728*L1*s2*t112*t13*t146*t17*t33*t47 + 12*L1*s2*t112*t13*t146*t4*t47 + 1728*L1*s2*t112*t146*t193*t33*t47 + 12*L1*s2*t115*t13*t146*t4*t47 + 12*L1*t0*t146*t16*u - L1*t111*t124*t149 + 144*L1*t112*t117*t118*t13*t146 + 144*L1*t112*t118*t13*t146*t42*t47 + 144*L1*t115*t117*t118*t13*t146 + 144*L1*t115*t118*t13*t146*t42*t47 + 12*L1*t146*t16*t4*u + 144*L1*t146*t16*t42*t43*u + 12*c*dphi1*m2*t0 + 12*c*dphi1*m2*t4 + 144*c*dphi1*m2*t42*t43 + 144*c*dphi1*m2*t43*t48 + 576*c*dphi2*m2*off*s2*t13*t41 + 576*c*dphi2*m2*off*s2*t16*t47 + 48*dphi1*dphi2*off*s2*t0*t146*t16*t41 + 48*dphi1*dphi2*off*s2*t146*t16*t4*t41 + 576*dphi1*dphi2*off*t118*t121*t146*t16 + 576*dphi1*dphi2*off*t118*t146*t16*t41*t48 + 288*dphi1*dphi2*t1*t13*t146*t16*t43*t48 + 288*dphi1*dphi2*t1*t14*t146*t41*t43*t47 + 1152*dphi1*dphi2*t13*t146*t16*t33*t43*t48 + 1152*dphi1*dphi2*t14*t146*t33*t41*t43*t47 - dphi2*m2*t82 + 12*grav*m1*m2*s1*t0*t13 + 12*grav*m1*m2*s1*t13*t4 + 144*grav*m1*m2*s1*t13*t42*t43 + 144*grav*m1*m2*s1*t13*t43*t48 + 288*grav*off*t146*t16*t41*t43*t47 + 144*grav*s2*t1*t13*t146*t16*t47 + 576*grav*s2*t13*t146*t16*t33*t47 - grav*t145*t189 + 24*m1*m2*off*s2*t1*t112*t16*t41 + 288*m1*m2*off*s2*t112*t14*t16*t28*t41 + 24*m1*m2*off*s2*t112*t16*t41*t6 + 288*m1*m2*off*s2*t112*t194*t28*t41 + 12*m1*m2*s1*t0*t16*u + 12*m1*m2*s1*t16*t4*u + 144*m1*m2*s1*t16*t42*t43*u + 144*m1*m2*s1*t16*t43*t48*u + 12*m1*m2*s2*t112*t13*t174*t47 - m1*t164*t174*t175 - m2*t0*t158 - m2*t101*t98 - m2*t113*t38*t93 - m2*t60*t91 - m2*t61*t91 - m2*t86*t90*t95 + 24*off*s2*t0*t112*t146*t16*t41 + 24*off*s2*t0*t115*t146*t16*t41 + 864*off*s2*t1*t112*t14*t146*t16*t41 + 864*off*s2*t1*t112*t146*t194*t41 + 24*off*s2*t112*t146*t16*t4*t41 + 24*off*s2*t115*t146*t16*t4*t41 + 288*off*t112*t118*t121*t146*t16 + 288*off*t112*t118*t146*t16*t41*t48 + 288*off*t115*t118*t121*t146*t16 + 288*off*t115*t118*t146*t16*t41*t48 + 288*off*t13*t146*t41*t43*t47*u - off*t15*t208 - off*t154*t198*t73 + 144*s2*t1*t13*t146*t16*t41*u + 144*s2*t112*t13*t146*t17*t174*t47 + 1152*s2*t112*t14*t146*t16*t197*t41 + 144*s2*t112*t146*t174*t193*t47 + 1152*s2*t112*t146*t194*t197*t41 + 576*s2*t13*t146*t16*t33*t41*u + 288*t1*t112*t13*t146*t16*t43*t48 + 288*t1*t112*t14*t146*t41*t43*t47 + 144*t1*t115*t13*t146*t16*t43*t48 + 144*t1*t115*t14*t146*t41*t43*t47 - t104*t109*t186 - t106*t154*t75 - t106*t155*t79 - t106*t182*t77 - t106*t204*t42 - t107*t13*t150 - t110*t124*t180 + 1152*t112*t13*t146*t16*t33*t43*t48 + 1152*t112*t14*t146*t33*t41*t43*t47 - t112*t182*t77 - t112*t204*t42 - t113*t13*t182*t203 + 576*t115*t13*t146*t16*t33*t43*t48 - t115*t139*t154 + 576*t115*t14*t146*t33*t41*t43*t47 - t115*t143*t155 - t115*t145*t182 - t115*t157*t61 - t117*t128*t191 - t120*t121*t189 - t120*t140*t189 - t123*t131*t16*t30 - t128*t138*t191 - t129*t205 - t129*t206 - t13*t145*t180*u - t130*t196 - t131*t200*t29 - t133*t205 - t133*t206 - t134*t196 - t135*t192 - t137*t192 - t14*t146*t16*t195 - t14*t163*t173 - t146*t15*t175*t202 - t146*t163*t69 - t146*t194*t195 - t147*t160 - t147*t161 - t147*t184 - t147*t190 - t149*t160 - t149*t161 - t149*t184 - t149*t190 - t15*t207*t74 - t151*t201*t203 - t152*t178 - t154*t83*t92 - t155*t198*t78 - t155*t86*t92 - t158*t2 - t158*t7 - t159*t17*t23 - t159*t24 - t159*t30 - t159*t38 - t162*t68 - t162*t69 - t165*t2 - t165*t7 - t166*t17*t173 - t167*t2 - t167*t7 - t168*t169 - t168*t181*t86 - t169*t170 - t17*t186*t199 - 1152*t17*t207*t33 - t17*t208*t33 - t170*t181*t83 - t171*t95 - t171*t98 - t172*t201*t29 - 12*t175*t7*t84 - t176*t182 - t177*t30 - t177*t38 - t179*t30 - t179*t38 - t180*t200*t202 - t183*t193*t199 - t183*t68*u - t185*t2 - t185*t7 - t187*t22 - t187*t26 - t188*t22 - t188*t26 - t209*t56 - t209*t69)/(m2*t3 + m2*t31 + m2*t32 + m2*t37 + m2*t39 + m2*t46 + m2*t49 + m2*t5 + m2*t51 + m2*t52 + m2*t63 + m2*t64 + m2*t65 + m2*t66 + m2*t8 + m2*t9 + t147*t35 + t147*t36 - t148*t15 - t148*t18 + t149*t35 + t149*t36 - t15*t150 - t150*t18 + t151*t25 + t151*t27 + t151*t62 + t152*t22 + t152*t26 + t152*t60 - t154*t56 + t154*t68 - t155*t58 + t155*t69 + t156*t75 - t156*t79 - t157*t77)])


def cart_accel_d1(phi1, phi2, dphi1, dphi2, u, m1, m2, c, geom):
    L1, L2, w1, w2, off, s1, s2, grav = geom
    t0 = math.cos(phi1)
    t1 = t0**2
    t2 = L1**2
    t3 = L2**2
    t4 = t2*t3
    t5 = m2*t4
    t6 = 12*t5
    t7 = math.sin(phi1)
    t8 = t7**2
    t9 = w2**2
    t10 = t2*t9
    t11 = m2*t10
    t12 = 12*t11
    t13 = t1*t3
    t14 = off**2
    t15 = 48*t14
    t16 = t13*t15
    t17 = t15*t8
    t18 = t17*t3
    t19 = t1*t9
    t20 = t15*t19
    t21 = t17*t9
    t22 = L1*m2
    t23 = 48*off
    t24 = t22*t23
    t25 = L1*t3
    t26 = m2*t25
    t27 = t23*t8
    t28 = t22*t9
    t29 = s2**2
    t30 = phi1 + phi2
    t31 = math.sin(t30)
    t32 = t31**2
    t33 = t29*t32
    t34 = t1*t33
    t35 = 144*t2
    t36 = t34*t35
    t37 = m2*t36
    t38 = math.cos(t30)
    t39 = t38**2
    t40 = t29*t39
    t41 = t40*t8
    t42 = t35*t41
    t43 = m2*t42
    t44 = 576*t14
    t45 = t34*t44
    t46 = m2*t45
    t47 = t41*t44
    t48 = m2*t47
    t49 = 576*off
    t50 = t22*t49
    t51 = t34*t50
    t52 = t41*t50
    t53 = t0*t7
    t54 = 1152*t14
    t55 = t29*t31*t38
    t56 = t54*t55
    t57 = t53*t56
    t58 = 288*t2
    t59 = t55*t58
    t60 = t53*t59
    t61 = 1152*off
    t62 = t22*t61
    t63 = t55*t62
    t64 = m1*t4
    t65 = m1*t10
    t66 = w1**2
    t67 = t3*t66
    t68 = m1*t67
    t69 = t66*t9
    t70 = m1*t69
    t71 = 12*t2
    t72 = t40*t71
    t73 = m1*t72
    t74 = t33*t71
    t75 = m1*t74
    t76 = s1**2
    t77 = 12*t76
    t78 = t13*t77
    t79 = m1*t78
    t80 = t77*t8
    t81 = t3*t80
    t82 = m1*t81
    t83 = t19*t77
    t84 = m1*t83
    t85 = t80*t9
    t86 = m1*t85
    t87 = 12*t66
    t88 = t40*t87
    t89 = m1*t88
    t90 = t33*t87
    t91 = m1*t90
    t92 = 144*t76
    t93 = t1*t40
    t94 = t92*t93
    t95 = m1*t94
    t96 = t33*t92
    t97 = t1*t96
    t98 = m1*t97
    t99 = t41*t92
    t100 = m1*t99
    t101 = t8*t96
    t102 = m1*t101
    t103 = t100 + t102 + t64 + t65 + t68 + t70 + t73 + t75 + t79 + t82 + t84 + t86 + t89 + t91 + t95 + t98
    t104 = m2*t16 + m2*t18 + m2*t20 + m2*t21 - m2*t57 - m2*t60 + t1*t12 + t1*t6 + t103 + t12*t8 - t13*t24 - t19*t24 - t26*t27 - t27*t28 + t37 + t43 + t46 + t48 - t51 - t52 + t53*t63 + t6*t8
    t105 = 1/t104
    t106 = 12*c
    t107 = t106*t3
    t108 = dphi1*t107
    t109 = dphi2*t107
    t110 = t106*t9
    t111 = dphi1*t110
    t112 = dphi2*t110
    t113 = grav*t7
    t114 = 12*t113
    t115 = 12*t0
    t116 = t115*t26
    t117 = t115*t9
    t118 = t117*t22
    t119 = m1*s1
    t120 = t114*t119
    t121 = t120*t3
    t122 = t115*t3
    t123 = t119*t122
    t124 = t123*u
    t125 = t120*t9
    t126 = t117*t119
    t127 = t126*u
    t128 = s2*t31
    t129 = 288*off
    t130 = c*t129
    t131 = t130*t7
    t132 = t128*t131
    t133 = s2*t38
    t134 = t0*t133
    t135 = t130*t134
    t136 = 144*c
    t137 = t136*t33
    t138 = dphi1*t137
    t139 = t136*t40
    t140 = dphi1*t139
    t141 = dphi2*t137
    t142 = dphi2*t139
    t143 = t113*t40
    t144 = 144*t22
    t145 = 144*t0
    t146 = t22*t33
    t147 = t145*t146
    t148 = t113*t33
    t149 = 144*t119
    t150 = t148*t149
    t151 = t143*t149
    t152 = t119*t145
    t153 = t152*t33
    t154 = t153*u
    t155 = t152*t40
    t156 = t155*u
    t157 = dphi2*t133
    t158 = t157*t7
    t159 = 24*t26
    t160 = t158*t159
    t161 = 24*t28
    t162 = t158*t161
    t163 = dphi2*t0
    t164 = t128*t163
    t165 = m2*t3
    t166 = t165*t23
    t167 = dphi1*t166
    t168 = m2*t9
    t169 = t168*t23
    t170 = t164*t169
    t171 = t133*t7
    t172 = dphi1**2
    t173 = 12*t172
    t174 = t171*t173
    t175 = dphi2**2
    t176 = 12*t175
    t177 = t171*t176
    t178 = 288*t22
    t179 = t38**3
    t180 = t179*t7
    t181 = s2**3
    t182 = dphi1*t181
    t183 = t180*t182
    t184 = t178*t183
    t185 = t31**3
    t186 = 24*off
    t187 = t0*t186
    t188 = t165*t187
    t189 = t128*t172
    t190 = t128*t175
    t191 = m2*t49
    t192 = t182*t185
    t193 = t163*t192
    t194 = t187*t9
    t195 = m2*t194
    t196 = t172*t181
    t197 = t144*t180
    t198 = t175*t181
    t199 = t0*t129
    t200 = t185*t199
    t201 = t196*t200
    t202 = t198*t200
    t203 = m2*t199
    t204 = grav*t55
    t205 = m2*t129
    t206 = t7*u
    t207 = t206*t55
    t208 = dphi2*t178
    t209 = t32*t38
    t210 = t209*t7
    t211 = t182*t210
    t212 = t146*t172*t49
    t213 = t182*t191
    t214 = t31*t39
    t215 = t163*t214
    t216 = t144*t7
    t217 = t196*t209
    t218 = t198*t209
    t219 = t172*t35
    t220 = t40*t53
    t221 = t219*t220
    t222 = t196*t214
    t223 = t172*t44
    t224 = t220*t223
    t225 = t198*t214
    t226 = t172*t55
    t227 = m2*t8
    t228 = t227*t55
    t229 = 144*L1*c*dphi2*s2*t0*t38 + 144*L1*c*dphi2*s2*t31*t7 + 24*L1*dphi1*dphi2*m2*s2*t0*t3*t31 + 24*L1*dphi1*dphi2*m2*s2*t0*t31*t9 + 288*L1*dphi1*dphi2*m2*t0*t181*t185 + 288*L1*dphi1*dphi2*m2*t0*t181*t31*t39 + 144*L1*grav*m2*t0*t29*t31*t38 + 576*L1*m2*off*t0*t172*t29*t39*t7 + 576*L1*m2*off*t172*t29*t31*t38*t8 + 12*L1*m2*s2*t0*t172*t3*t31 + 12*L1*m2*s2*t0*t172*t31*t9 + 12*L1*m2*s2*t0*t175*t3*t31 + 12*L1*m2*s2*t0*t175*t31*t9 + 144*L1*m2*t0*t172*t181*t185 + 144*L1*m2*t0*t172*t181*t31*t39 + 144*L1*m2*t0*t175*t181*t185 + 144*L1*m2*t0*t175*t181*t31*t39 + 144*L1*m2*t29*t31*t38*t7*u + 48*dphi1*dphi2*m2*off*s2*t3*t38*t7 + 48*dphi1*dphi2*m2*off*s2*t38*t7*t9 + 576*dphi1*dphi2*m2*off*t179*t181*t7 + 576*dphi1*dphi2*m2*off*t181*t32*t38*t7 - dphi1*t160 - dphi1*t162 - dphi1*t170 - dphi2*t132 - dphi2*t135 - dphi2*t184 + 288*grav*m2*off*t29*t39*t7 + 24*grav*m2*off*t3*t7 + 24*grav*m2*off*t7*t9 + 24*m2*off*s2*t172*t3*t38*t7 + 24*m2*off*s2*t172*t38*t7*t9 + 24*m2*off*s2*t175*t3*t38*t7 + 24*m2*off*s2*t175*t38*t7*t9 + 288*m2*off*t0*t29*t32*u + 24*m2*off*t0*t3*u + 24*m2*off*t0*t9*u + 288*m2*off*t172*t179*t181*t7 + 288*m2*off*t172*t181*t32*t38*t7 + 288*m2*off*t175*t179*t181*t7 + 288*m2*off*t175*t181*t32*t38*t7 + 576*m2*t0*t14*t172*t29*t32*t7 + 144*m2*t0*t172*t2*t29*t32*t7 + 576*m2*t1*t14*t172*t29*t31*t38 + 144*m2*t1*t172*t2*t29*t31*t38 - m2*t201 - m2*t202 - m2*t221 - m2*t224 - t1*t226*t50 - t108 + t109 - t111 + t112 - t114*t26 - t114*t28 - t116*u - t118*u - t121 - t124 - t125 - t127 - t138 - t140 + t141 + t142 - t143*t144 - t147*u - t150 - t151 - t154 - t156 - t164*t167 - t174*t26 - t174*t28 - t177*t26 - t177*t28 - t188*t189 - t188*t190 - t189*t195 - t190*t195 - t191*t193 - t196*t197 - t197*t198 - t203*t204 - t203*t222 - t203*t225 - t205*t207 - t208*t211 - t212*t53 - t213*t215 - t216*t217 - t216*t218 - t219*t228 - t223*t228
    t230 = m2**2
    t231 = L1*t23
    t232 = L1*t9
    t233 = 12*t4
    t234 = t233*t8
    t235 = t1*t233
    t236 = 12*t10
    t237 = t236*t8
    t238 = t1*t236
    t239 = L1*t49
    t240 = t230*t239*t41
    t241 = t230*t239*t34
    t242 = t53*t61
    t243 = t230*t55
    t244 = L1*t242*t243 + m2*t100 + m2*t102 + m2*t64 + m2*t65 + m2*t68 + m2*t70 + m2*t73 + m2*t75 + m2*t79 + m2*t82 + m2*t84 + m2*t86 + m2*t89 + m2*t91 + m2*t95 + m2*t98 - t13*t230*t231 + t16*t230 + t18*t230 - t19*t230*t231 + t20*t230 + t21*t230 - t230*t232*t27 + t230*t234 + t230*t235 + t230*t237 + t230*t238 - t230*t25*t27 + t230*t36 + t230*t42 + t230*t45 + t230*t47 - t230*t57 - t230*t60 - t240 - t241
    t245 = 1/t244
    t246 = m1*t106
    t247 = t2*t246
    t248 = t246*t66
    t249 = t136*t2
    t250 = t227*t249
    t251 = m2*t1
    t252 = t249*t251
    t253 = t113*t186
    t254 = t187*t3
    t255 = t136*t76
    t256 = t255*t8
    t257 = m1*t256
    t258 = m1*t1
    t259 = t255*t258
    t260 = c*t44
    t261 = t227*t260
    t262 = t251*t260
    t263 = m1*t71
    t264 = grav*t128
    t265 = m2*t264
    t266 = m2*t133
    t267 = t263*t266
    t268 = t265*t87
    t269 = t266*t87
    t270 = m1*t269
    t271 = t128*t7
    t272 = c*t178
    t273 = t271*t272
    t274 = t134*t272
    t275 = m2*t132
    t276 = m2*t135
    t277 = t129*t264
    t278 = t227*t277
    t279 = t129*t251
    t280 = t133*u
    t281 = t119*t280
    t282 = t113*t134
    t283 = t205*t282
    t284 = t119*t128*t206
    t285 = L1**3
    t286 = m2*t189
    t287 = t115*t285
    t288 = t286*t287
    t289 = t227*t92
    t290 = t264*t289
    t291 = t251*t92
    t292 = t264*t291
    t293 = t280*t289
    t294 = t280*t291
    t295 = t134*t230
    t296 = t128*t230
    t297 = t0*t239
    t298 = t230*t264
    t299 = t1*t35
    t300 = t133*t230
    t301 = t35*t8
    t302 = t300*t301
    t303 = t1*t44
    t304 = t33*u
    t305 = t44*t8
    t306 = t300*t305
    t307 = 24*dphi1
    t308 = t164*t307
    t309 = m1*t87
    t310 = t189*t22
    t311 = t0*t310
    t312 = t266*t7
    t313 = t2*t312
    t314 = t172*t186
    t315 = t313*t314
    t316 = t230*t3
    t317 = dphi1*t23
    t318 = dphi1*t300
    t319 = t318*t7
    t320 = dphi2*t23
    t321 = t320*t9
    t322 = t312*t66
    t323 = t314*t322
    t324 = t115*t25
    t325 = t230*t324
    t326 = 288*L1
    t327 = L1*t117
    t328 = t230*t327
    t329 = t171*t186
    t330 = t172*t329
    t331 = dphi2*t183
    t332 = t186*t9
    t333 = t172*t300
    t334 = t333*t7
    t335 = t300*t7
    t336 = L1*t145
    t337 = t185*t336
    t338 = t7**3
    t339 = t0**3
    t340 = 144*t285
    t341 = t339*t340
    t342 = t189*t230
    t343 = t129*t180
    t344 = t333*t338
    t345 = off**3
    t346 = 1152*t345
    t347 = 144*L1
    t348 = t310*t339
    t349 = t348*t92
    t350 = t172*t266
    t351 = t338*t350
    t352 = t129*t76
    t353 = t351*t352
    t354 = L1*t14
    t355 = 1728*t354
    t356 = off*t2
    t357 = 864*t356
    t358 = t342*t8
    t359 = t1*t334
    t360 = t163*t7
    t361 = t360*t40
    t362 = t230*t361
    t363 = L1*t61
    t364 = dphi1*t363
    t365 = m1*t8
    t366 = t171*t172
    t367 = t279*t366*t76
    t368 = t230*t326
    t369 = t182*t214
    t370 = t163*t369
    t371 = t220*t230
    t372 = t172*t363
    t373 = dphi1*t58
    t374 = t230*t33
    t375 = t360*t374
    t376 = t230*t49
    t377 = dphi2*t210
    t378 = t182*t377
    t379 = dphi1*t54
    t380 = t196*t336
    t381 = t172*t58
    t382 = t374*t53
    t383 = t175*t374
    t384 = t383*t53
    t385 = t129*t7
    t386 = t172*t54
    t387 = dphi2*t8
    t388 = t230*t8
    t389 = dphi2*t1
    t390 = t230*t389
    t391 = t390*t59
    t392 = t390*t56
    t393 = t1*t230
    t394 = t393*t59
    t395 = t175*t243
    t396 = t393*t56
    t397 = 144*L1*c*dphi1*m2*s2*t0*t38 + 144*L1*c*dphi1*m2*s2*t31*t7 + 576*L1*c*dphi2*m2*off*t1 + 576*L1*c*dphi2*m2*off*t8 + 1152*L1*dphi1*dphi2*off*t0*t230*t29*t32*t7 + 1152*L1*dphi1*dphi2*off*t1*t230*t29*t31*t38 + 24*L1*dphi1*dphi2*s2*t230*t3*t38*t7 + 24*L1*dphi1*dphi2*s2*t230*t38*t7*t9 + 288*L1*dphi1*dphi2*t179*t181*t230*t7 + 288*L1*dphi1*dphi2*t181*t230*t32*t38*t7 + 144*L1*grav*m1*m2*s1*s2*t0*t38*t7 + 144*L1*grav*m1*m2*s1*s2*t31*t8 + 576*L1*grav*off*s2*t1*t230*t31 + 144*L1*grav*t230*t29*t39*t7 + 12*L1*grav*t230*t3*t7 + 12*L1*grav*t230*t7*t9 + 144*L1*m1*m2*s1*s2*t0*t31*t7*u + 144*L1*m1*m2*s1*s2*t1*t38*u + 144*L1*m1*m2*s2*t1*t172*t38*t7*t76 + 144*L1*m1*m2*s2*t172*t338*t38*t76 + 12*L1*m1*m2*s2*t172*t38*t66*t7 + 576*L1*off*s2*t230*t38*t8*u + 1152*L1*off*t0*t172*t230*t29*t32*t7 + 576*L1*off*t0*t175*t230*t29*t32*t7 + 1152*L1*off*t1*t172*t230*t29*t31*t38 + 576*L1*off*t1*t175*t230*t29*t31*t38 + 1728*L1*s2*t1*t14*t172*t230*t38*t7 + 1728*L1*s2*t14*t172*t230*t338*t38 + 12*L1*s2*t172*t230*t3*t38*t7 + 12*L1*s2*t172*t230*t38*t7*t9 + 12*L1*s2*t175*t230*t3*t38*t7 + 12*L1*s2*t175*t230*t38*t7*t9 + 144*L1*t0*t230*t29*t32*u + 12*L1*t0*t230*t3*u + 12*L1*t0*t230*t9*u + 144*L1*t172*t179*t181*t230*t7 + 144*L1*t172*t181*t230*t32*t38*t7 + 144*L1*t175*t179*t181*t230*t7 + 144*L1*t175*t181*t230*t32*t38*t7 + 144*c*dphi1*m2*t29*t32 + 144*c*dphi1*m2*t29*t39 + 12*c*dphi1*m2*t3 + 12*c*dphi1*m2*t9 + 576*c*dphi2*m2*off*s2*t0*t38 + 576*c*dphi2*m2*off*s2*t31*t7 + 48*dphi1*dphi2*off*s2*t0*t230*t3*t31 + 48*dphi1*dphi2*off*s2*t0*t230*t31*t9 + 576*dphi1*dphi2*off*t0*t181*t185*t230 + 576*dphi1*dphi2*off*t0*t181*t230*t31*t39 + 1152*dphi1*dphi2*t0*t14*t230*t29*t39*t7 + 288*dphi1*dphi2*t0*t2*t230*t29*t39*t7 + 1152*dphi1*dphi2*t14*t230*t29*t31*t38*t8 + 288*dphi1*dphi2*t2*t230*t29*t31*t38*t8 - dphi1*t275 - dphi1*t276 - dphi1*t391 - dphi1*t392 - dphi2*t247 - dphi2*t248 - dphi2*t250 - dphi2*t252 - dphi2*t257 - dphi2*t259 - dphi2*t261 - dphi2*t262 - dphi2*t273 - dphi2*t274 + 144*grav*m1*m2*s1*t29*t32*t7 + 144*grav*m1*m2*s1*t29*t39*t7 + 12*grav*m1*m2*s1*t3*t7 + 12*grav*m1*m2*s1*t7*t9 + 288*grav*off*t0*t230*t29*t31*t38 + 576*grav*s2*t0*t14*t230*t38*t7 + 144*grav*s2*t0*t2*t230*t38*t7 + 24*m1*m2*off*s2*t0*t172*t2*t31 + 24*m1*m2*off*s2*t0*t172*t31*t66 + 288*m1*m2*off*s2*t0*t172*t31*t76*t8 + 288*m1*m2*off*s2*t172*t31*t339*t76 + 144*m1*m2*s1*t0*t29*t32*u + 144*m1*m2*s1*t0*t29*t39*u + 12*m1*m2*s1*t0*t3*u + 12*m1*m2*s1*t0*t9*u + 12*m1*m2*s2*t172*t285*t38*t7 - m1*t268 - m1*t288 - m1*t290 - m1*t292 - m1*t293 - m1*t294 - m1*t315 - m1*t323 - m1*t349 - m1*t353 - m1*t367 - m2*t109 - m2*t112 - m2*t141 - m2*t142 + 864*off*s2*t0*t172*t2*t230*t31*t8 + 24*off*s2*t0*t172*t230*t3*t31 + 24*off*s2*t0*t172*t230*t31*t9 + 24*off*s2*t0*t175*t230*t3*t31 + 24*off*s2*t0*t175*t230*t31*t9 + 864*off*s2*t172*t2*t230*t31*t339 + 288*off*t0*t172*t181*t185*t230 + 288*off*t0*t172*t181*t230*t31*t39 + 288*off*t0*t175*t181*t185*t230 + 288*off*t0*t175*t181*t230*t31*t39 + 288*off*t230*t29*t31*t38*t7*u + 576*s2*t0*t14*t230*t31*t7*u + 1152*s2*t0*t172*t230*t31*t345*t8 + 144*s2*t0*t2*t230*t31*t7*u + 144*s2*t1*t172*t230*t285*t38*t7 + 144*s2*t172*t230*t285*t338*t38 + 1152*s2*t172*t230*t31*t339*t345 + 1152*t0*t14*t172*t230*t29*t39*t7 + 576*t0*t14*t175*t230*t29*t39*t7 + 288*t0*t172*t2*t230*t29*t39*t7 + 144*t0*t175*t2*t230*t29*t39*t7 - t0*t355*t358 - t113*t239*t295 - t119*t278 - t119*t283 - t129*t143*t230 + 1152*t14*t172*t230*t29*t31*t38*t8 + 576*t14*t175*t230*t29*t31*t38*t8 - t145*t285*t358 - t158*t316*t317 + 288*t172*t2*t230*t29*t31*t38*t8 - t172*t394 - t172*t396 + 144*t175*t2*t230*t29*t31*t38*t8 - t175*t239*t371 - t175*t239*t388*t55 - t175*t316*t329 - t175*t332*t335 - t189*t325 - t189*t328 - t190*t325 - t190*t328 - t193*t230*t326 - t194*t230*u - t196*t230*t337 - t196*t230*t343 - t198*t230*t337 - t198*t230*t343 - t199*t230*t304 - t203*t284 - t204*t230*t336 - t206*t230*t347*t55 - t206*t296*t297 - t214*t230*t380 - t217*t230*t385 - t218*t230*t385 - t225*t230*t336 - t226*t363*t388 - t230*t232*t308 - t230*t25*t308 - t230*t253*t3 - t230*t253*t9 - t230*t254*u - t230*t331*t49 - t243*t364*t387 - t263*t265 - t267*u - t270*u - t279*t281 - t298*t299 - t298*t303 - t299*t395 - t302*u - t303*t395 - t306*u - t309*t311 - t311*t365*t92 - t316*t330 - t319*t321 - t332*t334 - t339*t342*t355 - t341*t342 - t344*t346 - t344*t357 - t346*t359 - t35*t384 - t357*t359 - t362*t364 - t368*t370 - t371*t372 - t373*t375 - t375*t379 - t376*t378 - t381*t382 - t382*t386 - t384*t44
    t398 = t186*t206
    t399 = grav*t147
    t400 = t206*t40
    t401 = t205*t400
    t402 = t145*t22
    t403 = t55*u
    t404 = t113*t55
    t405 = L1*t136
    t406 = grav*t40
    t407 = m2*t33
    t408 = t129*t206
    t409 = dphi1*dphi2
    t410 = t159*t409
    t411 = t161*t409
    t412 = dphi2*t167
    t413 = t169*t409
    t414 = t173*t271
    t415 = t133*t172
    t416 = t176*t271
    t417 = t133*t175
    t418 = t192*t7
    t419 = t163*t179
    t420 = t178*t182
    t421 = t186*t271
    t422 = t172*t421
    t423 = t175*t421
    t424 = dphi2*t191
    t425 = t185*t196
    t426 = t179*t402
    t427 = t185*t198
    t428 = t205*t7
    t429 = t179*t203
    t430 = t0*u
    t431 = t430*t55
    t432 = t369*t7
    t433 = t163*t209
    t434 = t227*t33
    t435 = m2*t93
    t436 = t226*t53
    t437 = 2304*off
    t438 = t22*t437
    t439 = 576*t2
    t440 = 2304*t14
    t441 = t146*t242
    t442 = t220*t62
    t443 = t407*t53
    t444 = t443*t58
    t445 = m2*t220*t58
    t446 = t443*t54
    t447 = t220*t54
    t448 = m2*t447
    t449 = t63*t8
    t450 = t1*t63
    t451 = t227*t59
    t452 = t251*t59
    t453 = t227*t56
    t454 = t251*t54
    t455 = t454*t55
    t456 = t229/t104**2
    t457 = t178*t181
    t458 = dphi2*t180
    t459 = t457*t458
    t460 = t0*t191
    t461 = t192*t460
    t462 = t181*t191
    t463 = t163*t185
    t464 = t462*t463
    t465 = dphi1*t171
    t466 = t159*t465
    t467 = t161*t465
    t468 = t0*t128
    t469 = t167*t468
    t470 = dphi1*t468
    t471 = t169*t470
    t472 = t164*t166
    t473 = t210*t420
    t474 = t377*t457
    t475 = t369*t460
    t476 = t215*t462
    t477 = t107 + t110 + t137 + t139
    t478 = t0*t192
    t479 = t312*t9
    t480 = t0*t178
    t481 = s1*t114
    t482 = s1*u
    t483 = 144*s1
    t484 = t145*t482
    t485 = t158*t307
    t486 = t164*t317
    t487 = t173*t25
    t488 = t171*t232
    t489 = t180*t347
    t490 = t347*t7
    t491 = t1*t239
    t492 = L1*t55
    t493 = 12*dphi1
    t494 = 12*dphi2
    t495 = t3*t494
    t496 = t494*t9
    t497 = 144*dphi2
    t498 = L1*t497
    t499 = dphi2*t129
    t500 = 144*dphi1
    t501 = t33*t497
    t502 = t40*t497
    t503 = 12*t206
    t504 = t230*t503
    t505 = t230*t254
    t506 = t194*t230
    t507 = t119*t503
    t508 = t113*t296
    t509 = t0*t44*t508
    t510 = t0*t35*t508
    t511 = t206*t295
    t512 = t35*t511
    t513 = t128*u
    t514 = t230*t513
    t515 = t44*t511
    t516 = t239*t511
    t517 = t119*t8
    t518 = t119*t133
    t519 = t279*t518
    t520 = t297*t508
    t521 = t119*t134*t206
    t522 = t205*t521
    t523 = t113*t128
    t524 = t152*t22*t523
    t525 = t144*t521
    t526 = t119*t203*t523
    t527 = t199*t374
    t528 = m1*t133
    t529 = t291*t528
    t530 = t289*t528
    t531 = -144*L1*grav*t0*t230*t29*t32 + grav*t267 + grav*t270 + grav*t527 + grav*t529 + grav*t530 - 144*m1*m2*s2*t1*t31*t76*u - 12*m1*m2*s2*t2*t31*u - 12*m1*m2*s2*t31*t66*u - 144*m1*m2*s2*t31*t76*t8*u - 288*off*t230*t29*t39*t7*u + t230*t347*t400
    t532 = t230*t336
    t533 = t179*t230
    t534 = t230*t490
    t535 = grav*t300
    t536 = t338*t342
    t537 = t230*t93
    t538 = t175*t537
    t539 = t374*t8
    t540 = t230*t271
    t541 = t232*t540
    t542 = t25*t540
    t543 = m1*t287
    t544 = t136*t22
    t545 = t172*t340
    t546 = t271*t393
    t547 = t134*t388
    t548 = t163*t182
    t549 = dphi2*t537
    t550 = t374*t387
    t551 = dphi1*t266
    t552 = t230*t34
    t553 = t230*t41
    t554 = t134*t172
    t555 = t22*t309
    t556 = t172*t271
    t557 = dphi2*t307
    t558 = t295*t557
    t559 = t172*t528
    t560 = t22*t92
    t561 = t395*t53
    t562 = t363*t409
    t563 = t230*t436
    t564 = 1152*t2
    t565 = t172*t355
    t566 = 4608*t14
    t567 = dphi1*t360
    t568 = t243*t567
    t569 = t363*t371
    t570 = t382*t58
    t571 = t382*t54
    t572 = t492*t61
    t573 = t388*t572
    t574 = t397/t244**2
    t575 = 2304*t345
    t576 = t318*t338
    t577 = t183*t376
    t578 = t181*t458
    t579 = t376*t578
    t580 = t368*t478
    t581 = 288*t285
    t582 = t339*t581
    t583 = dphi1*t296
    t584 = t181*t463
    t585 = t368*t584
    t586 = t339*t583
    t587 = 3456*t354
    t588 = t1*t319
    t589 = dphi1*t55
    t590 = t393*t589
    t591 = dphi1*t382
    t592 = 1728*t356
    t593 = t375*t54
    t594 = t211*t376
    t595 = t181*t377
    t596 = t376*t595
    t597 = t0*t369
    t598 = t368*t597
    t599 = t388*t470
    t600 = t181*t215
    t601 = t368*t600
    t602 = t375*t58
    t603 = t23*t316
    t604 = t465*t603
    t605 = t23*t9
    t606 = t319*t605
    t607 = t158*t603
    t608 = t321*t335
    t609 = 24*t25
    t610 = t0*t583
    t611 = t609*t610
    t612 = 24*t232
    t613 = t610*t612
    t614 = m2*t470
    t615 = m1*t285
    t616 = t164*t230
    t617 = t609*t616
    t618 = t612*t616
    t619 = dphi2*t335
    t620 = t230*t387
    t621 = dphi1*t371
    t622 = t388*t589
    t623 = L1*t437
    t624 = dphi1*t437
    t625 = t492*t624
    t626 = t362*t363
    t627 = t243*t363
    t628 = t387*t627
    t629 = t49*t76
    t630 = t178*t76
    t631 = dphi1*t630
    t632 = m1*t128*t339
    t633 = m1*t317
    t634 = m1*t66
    t635 = 24*t22*t634
    t636 = t23*t614
    t637 = dphi1*t76
    t638 = m2*t107 + m2*t110 + m2*t137 + m2*t139
    t639 = t203*t271
    t640 = dphi2*t106
    t641 = t311*t8
    t642 = c*dphi2*t326
    t643 = t227*t280
    t644 = t264*t92
    t645 = t280*t92
    t646 = dphi1*t164
    t647 = 96*off
    t648 = t0*t189
    t649 = t0*t190
    t650 = 576*t22
    t651 = m1*t330
    t652 = m2*t61
    t653 = t23*t479
    t654 = t180*t191
    t655 = L1*t92
    t656 = 3456*t14
    t657 = t251*t366
    t658 = t407*t567
    t659 = t172*t443
    t660 = t191*t7
    t661 = t251*t409*t55
    t662 = t226*t251
    t663 = 24*t5
    t664 = 24*t11
    t665 = 96*t14
    t666 = m2*t665
    t667 = m2*t34
    t668 = m2*t41
    t669 = m1*t494
    t670 = t2*t497
    t671 = t497*t76
    t672 = dphi2*t44
    t673 = dphi1*t205
    alpha = np.array([t105*t229, t245*t397])
    d1 = np.array([[t105*(144*L1*grav*m2*t29*t31*t38*t7 + 144*L1*m2*t29*t39*t7*u + 12*L1*m2*t3*t7*u + 12*L1*m2*t7*t9*u + 288*grav*m2*off*t0*t29*t32 + 24*grav*m2*off*t0*t3 + 24*grav*m2*off*t0*t9 - grav*t116 - grav*t118 - grav*t123 - grav*t126 - grav*t153 - grav*t155 + 144*m1*s1*t29*t32*t7*u + 144*m1*s1*t29*t39*t7*u + 12*m1*s1*t3*t7*u + 12*m1*s1*t7*t9*u + 288*m2*off*t0*t29*t31*t38*u - m2*t398*t9 - t165*t398 - t205*t404 - t399 - t401 - t402*t403), t105*(grav*t199*t407 + m2*t436*t439 + m2*t436*t440 + t116*t415 + t116*t417 + t118*t415 + t118*t417 + t130*t164 - t131*t157 + t134*t410 + t134*t411 - t134*t412 - t134*t413 + t144*t400 - 144*t146*t206 + t158*t405 - t164*t405 - t165*t422 - t165*t423 - t168*t422 - t168*t423 - t172*t37 - t172*t43 - t172*t46 - t172*t48 - t172*t50*t93 + t172*t51 + t172*t52 + t178*t404 - t178*t431 - t188*t415 - t188*t417 - t191*t404 + t191*t431 - t195*t415 - t195*t417 + t196*t426 - t196*t429 + t198*t426 - t198*t429 - t203*t217 - t203*t218 - t203*t406 + t208*t418 + t208*t432 - t212*t8 - t213*t419 - t213*t433 + t216*t222 + t216*t225 + t216*t425 + t216*t427 + t217*t402 + t218*t402 + t219*t434 + t219*t435 - t222*t428 + t223*t434 + t223*t435 - t225*t428 + t26*t414 + t26*t416 + t271*t410 + t271*t411 - t271*t412 - t271*t413 + t28*t414 + t28*t416 - t399 - t401 + t402*t406 + t407*t408 - t418*t424 + t419*t420 + t420*t433 - t424*t432 - t425*t428 - t427*t428 - t436*t438) + t456*(t441 - t442 - t444 + t445 - t446 + t448 - t449 + t450 + t451 - t452 + t453 - t455), t105*(1152*L1*dphi1*m2*off*t0*t29*t39*t7 + 1152*L1*dphi1*m2*off*t29*t31*t38*t8 + 24*L1*dphi1*m2*s2*t0*t3*t31 + 24*L1*dphi1*m2*s2*t0*t31*t9 + 288*L1*dphi1*m2*t0*t181*t185 + 288*L1*dphi1*m2*t0*t181*t31*t39 + 24*L1*dphi2*m2*s2*t0*t3*t31 + 24*L1*dphi2*m2*s2*t0*t31*t9 + 288*L1*dphi2*m2*t0*t181*t185 + 288*L1*dphi2*m2*t0*t181*t31*t39 + 48*dphi1*m2*off*s2*t3*t38*t7 + 48*dphi1*m2*off*s2*t38*t7*t9 + 576*dphi1*m2*off*t179*t181*t7 + 576*dphi1*m2*off*t181*t32*t38*t7 + 1152*dphi1*m2*t0*t14*t29*t32*t7 + 288*dphi1*m2*t0*t2*t29*t32*t7 + 1152*dphi1*m2*t1*t14*t29*t31*t38 + 288*dphi1*m2*t1*t2*t29*t31*t38 - dphi1*t441 - dphi1*t445 - dphi1*t448 - dphi1*t450 - dphi1*t451 - dphi1*t453 + 48*dphi2*m2*off*s2*t3*t38*t7 + 48*dphi2*m2*off*s2*t38*t7*t9 + 576*dphi2*m2*off*t179*t181*t7 + 576*dphi2*m2*off*t181*t32*t38*t7 - t160 - t162 - t170 - t184 - t459 - t461 - t464 - t466 - t467 - t469 - t471 - t472 - t473 - t474 - t475 - t476 - t477), t105*(-t132 + t134*t405 - t135 + t158*t166 + t159*t164 + t159*t470 - t160 + t161*t164 + t161*t470 - t162 + t167*t171 - t170 + t178*t478 + t183*t191 - t184 + t210*t213 + t215*t457 + t271*t405 + t317*t479 + t320*t479 + t369*t480 + t377*t462 + t457*t463 + t458*t462 - t459 - t461 - t464 - t466 - t467 - t469 - t471 - t472 - t473 - t474 - t475 - t476 + t477), t105*(144*L1*m2*t29*t31*t38*t7 + 288*m2*off*t0*t29*t32 + 24*m2*off*t0*t3 + 24*m2*off*t0*t9 - t116 - t118 - t123 - t126 - t147 - t153 - t155 - t428*t55), t105*(-t117*t482 - t122*t482 - t143*t483 - t148*t483 - t3*t481 - t33*t484 - t40*t484 - t481*t9) + t456*(-t10 - t101 - t4 - t67 - t69 - t72 - t74 - t78 - t81 - t83 - t85 - t88 - t90 - t94 - t97 - t99), t105*(24*L1*dphi1*dphi2*s2*t0*t3*t31 + 24*L1*dphi1*dphi2*s2*t0*t31*t9 + 288*L1*dphi1*dphi2*t0*t181*t185 + 288*L1*dphi1*dphi2*t0*t181*t31*t39 + 144*L1*grav*t0*t29*t31*t38 + 576*L1*off*t0*t172*t29*t39*t7 + 576*L1*off*t172*t29*t31*t38*t8 + 12*L1*s2*t0*t172*t3*t31 + 12*L1*s2*t0*t172*t31*t9 + 12*L1*s2*t0*t175*t3*t31 + 12*L1*s2*t0*t175*t31*t9 + 144*L1*t0*t172*t181*t185 + 144*L1*t0*t172*t181*t31*t39 + 144*L1*t0*t175*t181*t185 + 144*L1*t0*t175*t181*t31*t39 + 144*L1*t29*t31*t38*t7*u + 48*dphi1*dphi2*off*s2*t3*t38*t7 + 48*dphi1*dphi2*off*s2*t38*t7*t9 + 576*dphi1*dphi2*off*t179*t181*t7 + 576*dphi1*dphi2*off*t181*t32*t38*t7 + 288*grav*off*t29*t39*t7 + 24*grav*off*t3*t7 + 24*grav*off*t7*t9 + 24*off*s2*t172*t3*t38*t7 + 24*off*s2*t172*t38*t7*t9 + 24*off*s2*t175*t3*t38*t7 + 24*off*s2*t175*t38*t7*t9 + 288*off*t0*t29*t32*u + 24*off*t0*t3*u + 24*off*t0*t9*u + 288*off*t172*t179*t181*t7 + 288*off*t172*t181*t32*t38*t7 + 288*off*t175*t179*t181*t7 + 288*off*t175*t181*t32*t38*t7 + 576*t0*t14*t172*t29*t32*t7 + 144*t0*t172*t2*t29*t32*t7 + 576*t1*t14*t172*t29*t31*t38 + 144*t1*t172*t2*t29*t31*t38 - t114*t232 - t114*t25 - t143*t347 - t171*t487 - t172*t239*t33*t53 - t173*t488 - t176*t488 - t177*t25 - t189*t194 - t189*t254 - t190*t194 - t190*t254 - t193*t49 - t196*t199*t214 - t196*t489 - t198*t489 - t199*t204 - t199*t225 - t201 - t202 - t217*t490 - t218*t490 - t221 - t224 - t226*t301 - t226*t305 - t226*t491 - t232*t485 - t25*t485 - t3*t486 - t304*t336 - t324*u - t326*t331 - t326*t378 - t327*u - t370*t49 - t408*t55 - t486*t9) + t456*(576*L1*off*t1*t29*t32 + 48*L1*off*t1*t3 + 48*L1*off*t1*t9 + 576*L1*off*t29*t39*t8 + 48*L1*off*t3*t8 + 48*L1*off*t8*t9 + 1152*t0*t14*t29*t31*t38*t7 + 288*t0*t2*t29*t31*t38*t7 - t16 - t18 - t20 - t21 - t234 - t235 - t237 - t238 - t242*t492 - t36 - t42 - t45 - t47), t105*(t134*t498 - t134*t499 + t271*t498 - t271*t499 - t3*t493 - t33*t500 - t40*t500 - t493*t9 + t495 + t496 + t501 + t502)], [t245*(144*L1*grav*m1*m2*s1*s2*t1*t38 + 576*L1*grav*off*s2*t230*t38*t8 + 12*L1*grav*t0*t230*t3 + 12*L1*grav*t0*t230*t9 + 144*L1*t0*t230*t29*t31*t38*u + 144*grav*m1*m2*s1*t0*t29*t32 + 144*grav*m1*m2*s1*t0*t29*t39 + 12*grav*m1*m2*s1*t0*t3 + 12*grav*m1*m2*s1*t0*t9 + 288*grav*off*t230*t29*t31*t38*t7 - grav*t302 - grav*t306 - grav*t505 - grav*t506 - grav*t519 + 288*m1*m2*off*s1*s2*t31*t8*u - m2*t149*t400 - m2*t507*t9 + 24*off*t230*t3*t7*u + 24*off*t230*t7*t9*u + 576*s2*t1*t14*t230*t31*u + 144*s2*t1*t2*t230*t31*u - t113*t243*t347 - t144*t513*t517 - t149*t206*t407 - t165*t507 - t199*t230*t403 - t232*t504 - t25*t504 - t491*t514 + t509 + t510 - t512 - t515 + t516 - t520 + t522 + t524 - t525 - t526 - t531), t245*(144*L1*c*dphi1*m2*s2*t38*t7 + 288*L1*c*dphi2*m2*s2*t0*t31 + 4608*L1*dphi1*dphi2*off*t0*t230*t29*t31*t38*t7 + 1152*L1*dphi1*dphi2*off*t1*t230*t29*t39 + 1152*L1*dphi1*dphi2*off*t230*t29*t32*t8 + 144*L1*grav*m1*m2*s1*s2*t38*t8 + 576*L1*grav*off*s2*t1*t230*t38 + 4608*L1*off*t0*t172*t230*t29*t31*t38*t7 + 2304*L1*off*t0*t175*t230*t29*t31*t38*t7 + 1152*L1*off*t1*t172*t230*t29*t39 + 576*L1*off*t1*t175*t230*t29*t39 + 1152*L1*off*t172*t230*t29*t32*t8 + 576*L1*off*t175*t230*t29*t32*t8 + 288*L1*t0*t230*t29*t31*t38*u + 144*L1*t230*t29*t32*t7*u + 288*c*dphi1*m2*off*s2*t0*t31 + 576*c*dphi2*m2*off*s2*t38*t7 - c*t164*t191 + 48*dphi1*dphi2*off*s2*t0*t230*t3*t38 + 48*dphi1*dphi2*off*s2*t0*t230*t38*t9 + 48*dphi1*dphi2*off*s2*t230*t3*t31*t7 + 48*dphi1*dphi2*off*s2*t230*t31*t7*t9 + 576*dphi1*dphi2*off*t0*t179*t181*t230 + 576*dphi1*dphi2*off*t0*t181*t230*t32*t38 + 576*dphi1*dphi2*off*t181*t185*t230*t7 + 576*dphi1*dphi2*off*t181*t230*t31*t39*t7 + 1152*dphi1*dphi2*t1*t14*t230*t29*t32 + 288*dphi1*dphi2*t1*t2*t230*t29*t32 + 1152*dphi1*dphi2*t14*t230*t29*t39*t8 + 288*dphi1*dphi2*t2*t230*t29*t39*t8 - dphi2*t368*t418 - dphi2*t368*t432 + 288*grav*off*t0*t230*t29*t39 + 576*grav*off*t230*t29*t31*t38*t7 - grav*t129*t227*t518 + 288*m1*m2*off*s1*s2*t1*t31*u + 24*m1*m2*off*s2*t0*t172*t2*t38 + 24*m1*m2*off*s2*t0*t172*t38*t66 + 288*m1*m2*off*s2*t0*t172*t38*t76*t8 + 288*m1*m2*off*s2*t1*t172*t31*t7*t76 + 24*m1*m2*off*s2*t172*t2*t31*t7 + 288*m1*m2*off*s2*t172*t31*t338*t76 + 24*m1*m2*off*s2*t172*t31*t66*t7 + 288*m1*m2*off*s2*t172*t339*t38*t76 - m1*m2*t173*t271*t285 - m1*t310*t338*t92 + 864*off*s2*t0*t172*t2*t230*t38*t8 + 24*off*s2*t0*t172*t230*t3*t38 + 24*off*s2*t0*t172*t230*t38*t9 + 24*off*s2*t0*t175*t230*t3*t38 + 24*off*s2*t0*t175*t230*t38*t9 + 864*off*s2*t1*t172*t2*t230*t31*t7 + 864*off*s2*t172*t2*t230*t31*t338 + 864*off*s2*t172*t2*t230*t339*t38 + 24*off*s2*t172*t230*t3*t31*t7 + 24*off*s2*t172*t230*t31*t7*t9 + 24*off*s2*t175*t230*t3*t31*t7 + 24*off*s2*t175*t230*t31*t7*t9 + 288*off*t0*t172*t179*t181*t230 + 288*off*t0*t172*t181*t230*t32*t38 + 288*off*t0*t175*t179*t181*t230 + 288*off*t0*t175*t181*t230*t32*t38 + 288*off*t172*t181*t185*t230*t7 + 288*off*t172*t181*t230*t31*t39*t7 + 288*off*t175*t181*t185*t230*t7 + 288*off*t175*t181*t230*t31*t39*t7 + 1152*s2*t0*t172*t230*t345*t38*t8 + 1152*s2*t1*t172*t230*t31*t345*t7 + 576*s2*t14*t230*t31*t8*u + 1152*s2*t172*t230*t31*t338*t345 + 1152*s2*t172*t230*t339*t345*t38 + 144*s2*t2*t230*t31*t8*u - t1*t119*t144*t513 + 1152*t1*t14*t172*t230*t29*t32 + 576*t1*t14*t175*t230*t29*t32 + 288*t1*t172*t2*t230*t29*t32 + 144*t1*t175*t2*t230*t29*t32 - t131*t551 + 1152*t14*t172*t230*t29*t39*t8 + 576*t14*t175*t230*t29*t39*t8 - t158*t272 + 288*t172*t2*t230*t29*t39*t8 - t173*t541 + 144*t175*t2*t230*t29*t39*t8 - t175*t240 - t175*t241 - t176*t541 - t176*t542 - t179*t198*t532 - t209*t368*t548 - t217*t532 - t218*t532 - t222*t534 - t225*t534 - t232*t558 - t239*t514*t8 - t25*t558 - t258*t556*t560 - t299*t535 - t301*t383 - t303*t535 - t305*t383 - t325*t415 - t325*t417 - t326*t533*t548 - t328*t415 - t328*t417 - t333*t339*t355 - t333*t341 - t339*t559*t560 - t340*t536 - t35*t538 - t350*t543 - t355*t536 - t365*t554*t560 - t368*t404 - t372*t552 - t372*t553 - t373*t549 - t373*t550 - t374*t408 - t376*t431 - t379*t549 - t379*t550 - t380*t533 - t381*t537 - t381*t539 - t386*t537 - t386*t539 - t406*t532 - t425*t534 - t427*t534 - t439*t561 - t44*t538 - t440*t561 - t470*t544 - t487*t540 - t509 - t510 + t512 + t515 - t516 + t520 - t522 - t524 + t525 + t526 - t531 - t541*t557 - t542*t557 - t545*t546 - t545*t547 - t546*t565 - t547*t565 - t552*t562 - t553*t562 - t554*t555 - t555*t556 - t563*t564 - t563*t566 - t564*t568 - t566*t568) + t574*(t230*t447 + t363*t382 + t371*t58 + t388*t56 + t388*t59 + t393*t572 - t394 - t396 - t569 - t570 - t571 - t573), t245*(m1*t2*t636 + m1*t227*t470*t629 - m1*t251*t465*t629 - m1*t338*t551*t629 - t128*t365*t480*t637 + t134*t544 + t164*t603 + t183*t368 + t191*t632*t637 + t211*t368 + t258*t465*t630 + t271*t544 - t275 - t276 + t307*t312*t615 - t313*t633 + t319*t609 + t319*t612 - t322*t633 + t338*t528*t631 + t339*t575*t583 + t362*t54 + t362*t58 + t363*t375 + t368*t578 + t368*t595 + t376*t478 + t376*t584 + t376*t597 + t376*t600 - t388*t625 + t389*t627 - t391 - t392 + t393*t625 - t439*t590 - t439*t591 + t439*t621 + t439*t622 - t440*t590 - t440*t591 + t440*t621 + t440*t622 + t465*t635 + t470*t603 - t470*t635 + t56*t620 - t575*t576 - t575*t588 + t575*t599 + t576*t581 + t576*t587 - t576*t592 - t577 - t579 - t580 + t581*t588 - t581*t599 - t582*t583 - t585 - t586*t587 + t586*t592 + t587*t588 - t587*t599 - t588*t592 + t59*t620 + t591*t623 + t592*t599 - t593 - t594 - t596 - t598 - t601 - t602 - t604 + t605*t610 + t605*t616 - t606 - t607 - t608 + t609*t619 - t611 + t612*t619 - t613 - 24*t614*t615 - t617 - t618 - t621*t623 - t626 - t628 - t631*t632 + t634*t636 + t638), t245*(576*L1*c*m2*off*t1 + 576*L1*c*m2*off*t8 + 1152*L1*dphi1*off*t0*t230*t29*t32*t7 + 1152*L1*dphi1*off*t1*t230*t29*t31*t38 + 24*L1*dphi1*s2*t230*t3*t38*t7 + 24*L1*dphi1*s2*t230*t38*t7*t9 + 288*L1*dphi1*t179*t181*t230*t7 + 288*L1*dphi1*t181*t230*t32*t38*t7 + 1152*L1*dphi2*off*t0*t230*t29*t32*t7 + 1152*L1*dphi2*off*t1*t230*t29*t31*t38 + 24*L1*dphi2*s2*t230*t3*t38*t7 + 24*L1*dphi2*s2*t230*t38*t7*t9 + 288*L1*dphi2*t179*t181*t230*t7 + 288*L1*dphi2*t181*t230*t32*t38*t7 + 576*c*m2*off*s2*t0*t38 + 576*c*m2*off*s2*t31*t7 + 48*dphi1*off*s2*t0*t230*t3*t31 + 48*dphi1*off*s2*t0*t230*t31*t9 + 576*dphi1*off*t0*t181*t185*t230 + 576*dphi1*off*t0*t181*t230*t31*t39 + 1152*dphi1*t0*t14*t230*t29*t39*t7 + 288*dphi1*t0*t2*t230*t29*t39*t7 + 1152*dphi1*t14*t230*t29*t31*t38*t8 + 288*dphi1*t2*t230*t29*t31*t38*t8 - dphi1*t394 - dphi1*t396 - dphi1*t569 - dphi1*t570 - dphi1*t571 - dphi1*t573 + 48*dphi2*off*s2*t0*t230*t3*t31 + 48*dphi2*off*s2*t0*t230*t31*t9 + 576*dphi2*off*t0*t181*t185*t230 + 576*dphi2*off*t0*t181*t230*t31*t39 + 1152*dphi2*t0*t14*t230*t29*t39*t7 + 288*dphi2*t0*t2*t230*t29*t39*t7 + 1152*dphi2*t14*t230*t29*t31*t38*t8 + 288*dphi2*t2*t230*t29*t31*t38*t8 - t247 - t248 - t250 - t252 - t257 - t259 - t261 - t262 - t273 - t274 - t391 - t392 - t577 - t579 - t580 - t585 - t593 - t594 - t596 - t598 - t601 - t602 - t604 - t606 - t607 - t608 - t611 - t613 - t617 - t618 - t626 - t628 - t638), t245*(144*L1*m1*m2*s1*s2*t0*t31*t7 + 144*L1*m1*m2*s1*s2*t1*t38 + 576*L1*off*s2*t230*t38*t8 + 144*L1*t0*t230*t29*t32 + 12*L1*t0*t230*t3 + 12*L1*t0*t230*t9 + 144*m1*m2*s1*t0*t29*t32 + 144*m1*m2*s1*t0*t29*t39 + 12*m1*m2*s1*t0*t3 + 12*m1*m2*s1*t0*t9 + 288*off*t230*t29*t31*t38*t7 + 576*s2*t0*t14*t230*t31*t7 + 144*s2*t0*t2*t230*t31*t7 - t119*t639 - t267 - t270 - t297*t540 - t302 - t306 - t505 - t506 - t519 - t527 - t529 - t530 - t534*t55), t245*(144*L1*grav*m2*s1*s2*t0*t38*t7 + 144*L1*grav*m2*s1*s2*t31*t8 + 144*L1*m2*s1*s2*t0*t31*t7*u + 144*L1*m2*s1*s2*t1*t38*u + 144*L1*m2*s2*t1*t172*t38*t7*t76 + 144*L1*m2*s2*t172*t338*t38*t76 + 12*L1*m2*s2*t172*t38*t66*t7 - dphi2*t256 + 144*grav*m2*s1*t29*t32*t7 + 144*grav*m2*s1*t29*t39*t7 + 12*grav*m2*s1*t3*t7 + 12*grav*m2*s1*t7*t9 + 24*m2*off*s2*t0*t172*t2*t31 + 24*m2*off*s2*t0*t172*t31*t66 + 288*m2*off*s2*t0*t172*t31*t76*t8 + 288*m2*off*s2*t172*t31*t339*t76 + 144*m2*s1*t0*t29*t32*u + 144*m2*s1*t0*t29*t39*u + 12*m2*s1*t0*t3*u + 12*m2*s1*t0*t9*u + 12*m2*s2*t172*t285*t38*t7 - s1*t278 - s1*t283 - t133*t279*t482 - t2*t640 - t255*t389 - t265*t71 - t266*t71*u - t268 - t269*u - t288 - t290 - t292 - t293 - t294 - t311*t87 - t315 - t323 - t349 - t353 - t367 - t482*t639 - t640*t66 - t641*t92) + t574*(-m2*t101 - m2*t67 - m2*t69 - m2*t72 - m2*t74 - m2*t78 - m2*t81 - m2*t83 - m2*t85 - m2*t88 - m2*t90 - m2*t94 - m2*t97 - m2*t99 - t11 - t5), t245*(144*L1*c*dphi1*s2*t0*t38 + 144*L1*c*dphi1*s2*t31*t7 + 576*L1*c*dphi2*off*t1 + 576*L1*c*dphi2*off*t8 + 2304*L1*dphi1*dphi2*m2*off*t0*t29*t32*t7 + 2304*L1*dphi1*dphi2*m2*off*t1*t29*t31*t38 + 48*L1*dphi1*dphi2*m2*s2*t3*t38*t7 + 48*L1*dphi1*dphi2*m2*s2*t38*t7*t9 + 576*L1*dphi1*dphi2*m2*t179*t181*t7 + 576*L1*dphi1*dphi2*m2*t181*t32*t38*t7 + 144*L1*grav*m1*s1*s2*t0*t38*t7 + 144*L1*grav*m1*s1*s2*t31*t8 + 1152*L1*grav*m2*off*s2*t1*t31 + 288*L1*grav*m2*t29*t39*t7 + 24*L1*grav*m2*t3*t7 + 24*L1*grav*m2*t7*t9 + 144*L1*m1*s1*s2*t0*t31*t7*u + 144*L1*m1*s1*s2*t1*t38*u + 144*L1*m1*s2*t1*t172*t38*t7*t76 + 144*L1*m1*s2*t172*t338*t38*t76 + 12*L1*m1*s2*t172*t38*t66*t7 + 1152*L1*m2*off*s2*t38*t8*u + 2304*L1*m2*off*t0*t172*t29*t32*t7 + 1152*L1*m2*off*t0*t175*t29*t32*t7 + 2304*L1*m2*off*t1*t172*t29*t31*t38 + 1152*L1*m2*off*t1*t175*t29*t31*t38 + 3456*L1*m2*s2*t1*t14*t172*t38*t7 + 3456*L1*m2*s2*t14*t172*t338*t38 + 24*L1*m2*s2*t172*t3*t38*t7 + 24*L1*m2*s2*t172*t38*t7*t9 + 24*L1*m2*s2*t175*t3*t38*t7 + 24*L1*m2*s2*t175*t38*t7*t9 + 288*L1*m2*t0*t29*t32*u + 24*L1*m2*t0*t3*u + 24*L1*m2*t0*t9*u + 288*L1*m2*t172*t179*t181*t7 + 288*L1*m2*t172*t181*t32*t38*t7 + 288*L1*m2*t175*t179*t181*t7 + 288*L1*m2*t175*t181*t32*t38*t7 - L1*t309*t648 + 576*c*dphi2*off*s2*t0*t38 + 576*c*dphi2*off*s2*t31*t7 + 96*dphi1*dphi2*m2*off*s2*t0*t3*t31 + 96*dphi1*dphi2*m2*off*s2*t0*t31*t9 + 1152*dphi1*dphi2*m2*off*t0*t181*t185 + 1152*dphi1*dphi2*m2*off*t0*t181*t31*t39 + 2304*dphi1*dphi2*m2*t0*t14*t29*t39*t7 + 576*dphi1*dphi2*m2*t0*t2*t29*t39*t7 + 2304*dphi1*dphi2*m2*t14*t29*t31*t38*t8 + 576*dphi1*dphi2*m2*t2*t29*t31*t38*t8 - dphi1*t132 - dphi1*t135 - dphi1*t158*t165*t647 + 576*grav*m2*off*t0*t29*t31*t38 + 1152*grav*m2*s2*t0*t14*t38*t7 + 288*grav*m2*s2*t0*t2*t38*t7 + 24*m1*off*s2*t0*t172*t2*t31 + 24*m1*off*s2*t0*t172*t31*t66 + 288*m1*off*s2*t0*t172*t31*t76*t8 + 288*m1*off*s2*t172*t31*t339*t76 + 12*m1*s2*t172*t285*t38*t7 - m1*t189*t339*t655 + 1728*m2*off*s2*t0*t172*t2*t31*t8 + 48*m2*off*s2*t0*t172*t3*t31 + 48*m2*off*s2*t0*t172*t31*t9 + 48*m2*off*s2*t0*t175*t3*t31 + 48*m2*off*s2*t0*t175*t31*t9 + 1728*m2*off*s2*t172*t2*t31*t339 + 576*m2*off*t0*t172*t181*t185 + 576*m2*off*t0*t172*t181*t31*t39 + 576*m2*off*t0*t175*t181*t185 + 576*m2*off*t0*t175*t181*t31*t39 + 576*m2*off*t29*t31*t38*t7*u + 1152*m2*s2*t0*t14*t31*t7*u + 2304*m2*s2*t0*t172*t31*t345*t8 + 288*m2*s2*t0*t2*t31*t7*u + 288*m2*s2*t1*t172*t285*t38*t7 + 288*m2*s2*t172*t285*t338*t38 + 2304*m2*s2*t172*t31*t339*t345 + 2304*m2*t0*t14*t172*t29*t39*t7 + 1152*m2*t0*t14*t175*t29*t39*t7 + 576*m2*t0*t172*t2*t29*t39*t7 + 288*m2*t0*t175*t2*t29*t39*t7 + 2304*m2*t14*t172*t29*t31*t38*t8 + 1152*m2*t14*t175*t29*t31*t38*t8 + 576*m2*t172*t2*t29*t31*t38*t8 + 288*m2*t175*t2*t29*t31*t38*t8 - t1*t129*t281 + t108 - t109 + t111 - t112 - t113*t166 - t113*t169 - t119*t129*t282 + t121 + t124 + t125 + t127 - t134*t642 + t138 + t140 - t141 - t142 - t143*t191 + t150 + t151 + t154 + t156 - t159*t648 - t159*t649 - t161*t648 - t161*t649 - t166*t171*t175 - t166*t366 - t166*t430 - t169*t430 - t172*t220*t438 - t172*t653 - t175*t442 - t175*t444 - t175*t446 - t175*t449 - t175*t452 - t175*t455 - t175*t653 - t178*t207 - t189*t543 - t193*t650 - t196*t654 - t198*t654 - t199*t284 - t2*t651 - t204*t480 - t206*t468*t62 - t217*t660 - t218*t660 - t22*t361*t624 - t222*t480 - t225*t480 - t226*t438*t8 - t227*t581*t648 - t249*t387 - t249*t389 - t251*t264*t58 - t258*t352*t366 - t258*t644 - t258*t645 - 48*t26*t646 - t260*t387 - t260*t389 - t263*t264 - t263*t280 - t264*t309 - t264*t454 - t271*t642 - t277*t517 - 48*t28*t646 - t280*t309 - t282*t62 - t286*t582 - t331*t652 - t338*t352*t559 - t348*t656 - t351*t575 - t351*t592 - t365*t644 - t365*t645 - t365*t648*t655 - t370*t650 - t378*t652 - t387*t438*t589 - t407*t430*t49 - t409*t479*t647 - t425*t480 - t427*t480 - t439*t658 - t439*t659 - t439*t661 - t439*t662 - t440*t658 - t440*t659 - t440*t661 - t440*t662 - t54*t643 - t575*t657 - t58*t643 - t592*t657 - t641*t656 - t651*t66) + t574*(1152*L1*m2*off*t1*t29*t32 + 96*L1*m2*off*t1*t3 + 96*L1*m2*off*t1*t9 + 1152*L1*m2*off*t29*t39*t8 + 96*L1*m2*off*t3*t8 + 96*L1*m2*off*t8*t9 + 2304*m2*t0*t14*t29*t31*t38*t7 + 576*m2*t0*t2*t29*t31*t38*t7 - t1*t663 - t1*t664 - t103 - t13*t666 - t165*t665*t8 - t19*t666 - t227*t665*t9 - t438*t53*t55 - t54*t667 - t54*t668 - t58*t667 - t58*t668 - t663*t8 - t664*t8), t245*(144*L1*dphi1*m2*s2*t0*t38 + 144*L1*dphi1*m2*s2*t31*t7 + 576*L1*dphi2*m2*off*t1 + 576*L1*dphi2*m2*off*t8 + 144*dphi1*m2*t29*t32 + 144*dphi1*m2*t29*t39 + 12*dphi1*m2*t3 + 12*dphi1*m2*t9 + 576*dphi2*m2*off*s2*t0*t38 + 576*dphi2*m2*off*s2*t31*t7 - m2*t495 - m2*t496 - m2*t501 - m2*t502 - t134*t208 - t134*t673 - t2*t669 - t208*t271 - t227*t670 - t227*t672 - t251*t670 - t251*t672 - t258*t671 - t271*t673 - t365*t671 - t66*t669)]])
    return alpha, d1


def cart_core(phi1, phi2, dphi1, dphi2, u, m1, m2, c, geom):
    L1, L2, w1, w2, off, s1, s2, grav = geom
    t0 = math.cos(phi1)
    t1 = t0**2
    t2 = L1**2
    t3 = L2**2
    t4 = t2*t3
    t5 = m2*t4
    t6 = 12*t5
    t7 = math.sin(phi1)
    t8 = t7**2
    t9 = w2**2
    t10 = t2*t9
    t11 = m2*t10
    t12 = 12*t11
    t13 = off**2
    t14 = 48*t13
    t15 = t1*t3
    t16 = t14*t15
    t17 = t14*t8
    t18 = t17*t3
    t19 = t1*t9
    t20 = t14*t19
    t21 = t17*t9
    t22 = L1*off
    t23 = 48*t22
    t24 = t15*t23
    t25 = t23*t8
    t26 = t25*t3
    t27 = t19*t23
    t28 = t25*t9
    t29 = phi1 + phi2
    t30 = math.sin(t29)
    t31 = t30**2
    t32 = s2**2
    t33 = 144*t32
    t34 = t31*t33
    t35 = m2*t34
    t36 = t1*t2
    t37 = t35*t36
    t38 = math.cos(t29)
    t39 = t38**2
    t40 = t33*t39
    t41 = m2*t40
    t42 = t2*t8
    t43 = t41*t42
    t44 = 576*t13
    t45 = m2*t44
    t46 = t1*t45
    t47 = t31*t32
    t48 = t46*t47
    t49 = t45*t8
    t50 = t32*t39
    t51 = t49*t50
    t52 = t1*t31
    t53 = t32*t52
    t54 = 576*t22
    t55 = m2*t54
    t56 = t53*t55
    t57 = t39*t8
    t58 = t32*t57
    t59 = t55*t58
    t60 = t30*t38
    t61 = t32*t60
    t62 = 1152*t13
    t63 = m2*t62
    t64 = t0*t7
    t65 = t63*t64
    t66 = 288*t32
    t67 = t2*t66
    t68 = t64*t67
    t69 = t60*t68
    t70 = L1*t0
    t71 = m2*t70
    t72 = off*t7
    t73 = 1152*t72
    t74 = t71*t73
    t75 = m1*t4
    t76 = m1*t10
    t77 = w1**2
    t78 = t3*t77
    t79 = m1*t78
    t80 = t77*t9
    t81 = m1*t80
    t82 = 12*m1
    t83 = t2*t82
    t84 = t32*t83
    t85 = t39*t84
    t86 = t31*t84
    t87 = s1**2
    t88 = 12*t3
    t89 = t87*t88
    t90 = t1*t89
    t91 = t8*t89
    t92 = 12*t9
    t93 = t87*t92
    t94 = t1*t93
    t95 = t8*t93
    t96 = t77*t82
    t97 = t32*t96
    t98 = t39*t97
    t99 = t31*t97
    t100 = t1*t87
    t101 = t100*t40
    t102 = t100*t34
    t103 = t8*t87
    t104 = t103*t40
    t105 = t103*t34
    t106 = m1*t101 + m1*t102 + m1*t104 + m1*t105 + m1*t90 + m1*t91 + m1*t94 + m1*t95 + t75 + t76 + t79 + t81 + t85 + t86 + t98 + t99
    t107 = m2*t16 + m2*t18 + m2*t20 + m2*t21 - m2*t24 - m2*t26 - m2*t27 - m2*t28 - m2*t69 + t1*t12 + t1*t6 + t106 + t12*t8 + t37 + t43 + t48 + t51 - t56 - t59 + t6*t8 - t61*t65 + t61*t74
    t108 = 1/t107
    t109 = c*t88
    t110 = dphi2*t109
    t111 = c*t92
    t112 = dphi2*t111
    t113 = dphi1*t109
    t114 = dphi1*t111
    t115 = c*t40
    t116 = dphi2*t115
    t117 = c*t34
    t118 = dphi2*t117
    t119 = dphi1*t115
    t120 = dphi1*t117
    t121 = dphi1**2
    t122 = t2*t64
    t123 = t121*t122
    t124 = t121*t42
    t125 = t33*t60
    t126 = t124*t125
    t127 = t121*t50
    t128 = t121*t61
    t129 = t1*t55
    t130 = t121*t47
    t131 = 576*t72
    t132 = m2*t88
    t133 = grav*t7
    t134 = L1*t133
    t135 = t132*t70
    t136 = m2*t92
    t137 = t136*t70
    t138 = s1*t133
    t139 = t138*t88
    t140 = m1*t139
    t141 = 24*off
    t142 = t133*t141
    t143 = t142*t3
    t144 = s1*t0
    t145 = t144*t88
    t146 = m1*t145
    t147 = t146*u
    t148 = t0*t141
    t149 = t148*t3
    t150 = m2*t149
    t151 = t138*t92
    t152 = m1*t151
    t153 = t142*t9
    t154 = t144*t92
    t155 = m1*t154
    t156 = t155*u
    t157 = t148*t9
    t158 = m2*t157
    t159 = t134*t41
    t160 = t35*t70
    t161 = t160*u
    t162 = t138*t34
    t163 = m1*t162
    t164 = t138*t40
    t165 = m1*t164
    t166 = off*t133
    t167 = t39*t66
    t168 = t166*t167
    t169 = m2*t168
    t170 = t144*t34
    t171 = m1*t170
    t172 = t171*u
    t173 = t144*t40
    t174 = m1*t173
    t175 = t174*u
    t176 = off*t0
    t177 = t31*t66
    t178 = t176*t177
    t179 = m2*t178
    t180 = t179*u
    t181 = grav*t70
    t182 = t125*t181
    t183 = L1*t7
    t184 = t183*u
    t185 = t125*t184
    t186 = grav*t176
    t187 = t60*t66
    t188 = t186*t187
    t189 = t72*u
    t190 = t187*t189
    t191 = -m2*t143 - m2*t153 - m2*t182 - m2*t185 + m2*t188 + m2*t190 + t132*t134 + t134*t136 + t135*u + t137*u + t140 + t147 - t150*u + t152 + t156 - t158*u + t159 + t161 + t163 + t165 - t169 + t172 + t175 - t180
    t192 = s2**3
    t193 = t121*t192
    t194 = t38**3
    t195 = 288*t72
    t196 = t194*t195
    t197 = t193*t196
    t198 = dphi2**2
    t199 = t192*t198
    t200 = t196*t199
    t201 = s2*t38
    t202 = 144*t70
    t203 = t201*t202
    t204 = c*t203
    t205 = s2*t30
    t206 = 144*t183
    t207 = t205*t206
    t208 = c*t207
    t209 = t30**3
    t210 = t202*t209
    t211 = t193*t210
    t212 = t199*t210
    t213 = t194*t206
    t214 = t193*t213
    t215 = t199*t213
    t216 = 288*t176
    t217 = t201*t216
    t218 = c*t217
    t219 = t195*t205
    t220 = c*t219
    t221 = t209*t216
    t222 = t193*t221
    t223 = t199*t221
    t224 = m2*t192
    t225 = t194*t224
    t226 = t131*t225
    t227 = dphi1*t226
    t228 = t209*t224
    t229 = 288*t70
    t230 = t228*t229
    t231 = dphi1*t230
    t232 = t31*t38
    t233 = t193*t232
    t234 = t195*t233
    t235 = t199*t232
    t236 = t195*t235
    t237 = t30*t39
    t238 = t193*t237
    t239 = t202*t238
    t240 = t199*t237
    t241 = t202*t240
    t242 = t141*t7
    t243 = m2*t3
    t244 = t242*t243
    t245 = t121*t201
    t246 = t242*t9
    t247 = m2*t246
    t248 = t198*t201
    t249 = t121*t205
    t250 = t198*t205
    t251 = t132*t183
    t252 = t136*t183
    t253 = t193*t206
    t254 = t232*t253
    t255 = t206*t235
    t256 = 288*t183
    t257 = t225*t256
    t258 = dphi1*t257
    t259 = t193*t216
    t260 = t237*t259
    t261 = t216*t240
    t262 = 576*t176
    t263 = t228*t262
    t264 = dphi1*t263
    t265 = t224*t232
    t266 = t131*t265
    t267 = dphi1*t266
    t268 = t224*t237
    t269 = t229*t268
    t270 = dphi1*t269
    t271 = 48*t243
    t272 = dphi2*t201
    t273 = t272*t72
    t274 = t271*t273
    t275 = m2*t9
    t276 = 48*t275
    t277 = t273*t276
    t278 = 24*t70
    t279 = t243*t278
    t280 = dphi2*t205
    t281 = t279*t280
    t282 = t275*t278
    t283 = t280*t282
    t284 = t183*t272
    t285 = 24*t284
    t286 = t243*t285
    t287 = t275*t285
    t288 = 48*t176
    t289 = t243*t288
    t290 = t280*t289
    t291 = t275*t288
    t292 = t280*t291
    t293 = t256*t265
    t294 = dphi1*t293
    t295 = t262*t268
    t296 = dphi1*t295
    t297 = -dphi1*t274 - dphi1*t277 - dphi1*t281 - dphi1*t283 + dphi1*t286 + dphi1*t287 + dphi1*t290 + dphi1*t292 - dphi2*t204 - dphi2*t208 + dphi2*t218 + dphi2*t220 - dphi2*t227 - dphi2*t231 + dphi2*t258 + dphi2*t264 - dphi2*t267 - dphi2*t270 + dphi2*t294 + dphi2*t296 - m2*t197 - m2*t200 - m2*t211 - m2*t212 + m2*t214 + m2*t215 + m2*t222 + m2*t223 - m2*t234 - m2*t236 - m2*t239 - m2*t241 + m2*t254 + m2*t255 + m2*t260 + m2*t261 - t135*t249 - t135*t250 - t137*t249 - t137*t250 + t150*t249 + t150*t250 + t158*t249 + t158*t250 - t244*t245 - t244*t248 - t245*t247 + t245*t251 + t245*t252 - t247*t248 + t248*t251 + t248*t252
    t298 = 576*L1*m2*off*t0*t121*t32*t39*t7 + 576*L1*m2*off*t121*t30*t32*t38*t8 + 576*m2*t0*t121*t13*t31*t32*t7 + 144*m2*t0*t121*t2*t31*t32*t7 + 576*m2*t1*t121*t13*t30*t32*t38 + 144*m2*t1*t121*t2*t30*t32*t38 - m2*t126 + t110 + t112 - t113 - t114 + t116 + t118 - t119 - t120 - t123*t41 - t127*t45*t64 - t128*t129 - t128*t49 - t130*t131*t71 - t191 - t297
    t299 = m2**2
    t300 = t103*t132
    t301 = t100*t132
    t302 = t103*t136
    t303 = t100*t136
    t304 = 12*t4
    t305 = t304*t8
    t306 = t1*t304
    t307 = 12*t10
    t308 = t307*t8
    t309 = t1*t307
    t310 = t54*t58
    t311 = t299*t310
    t312 = t53*t54
    t313 = t299*t312
    t314 = t103*t35
    t315 = t103*t41
    t316 = t100*t35
    t317 = t100*t41
    t318 = t40*t42
    t319 = t34*t36
    t320 = t32*t44
    t321 = t320*t57
    t322 = t320*t52
    t323 = t299*t70
    t324 = t323*t73
    t325 = t62*t64
    t326 = m1*t300 + m1*t301 + m1*t302 + m1*t303 + m1*t314 + m1*t315 + m1*t316 + m1*t317 + m2*t75 + m2*t76 + m2*t79 + m2*t81 + m2*t85 + m2*t86 + m2*t98 + m2*t99 + t16*t299 + t18*t299 + t20*t299 + t21*t299 - t24*t299 - t26*t299 - t27*t299 - t28*t299 + t299*t305 + t299*t306 + t299*t308 + t299*t309 + t299*t318 + t299*t319 + t299*t321 + t299*t322 - t299*t325*t61 - t299*t69 - t311 - t313 + t324*t61
    t327 = 1/t326
    t328 = 12*c
    t329 = t2*t328
    t330 = m1*t329
    t331 = t328*t77
    t332 = m1*t331
    t333 = c*t1
    t334 = 144*t87
    t335 = t333*t334
    t336 = m1*t335
    t337 = c*t8
    t338 = t334*t337
    t339 = m1*t338
    t340 = 144*t2
    t341 = t333*t340
    t342 = m2*t341
    t343 = t337*t340
    t344 = m2*t343
    t345 = t333*t44
    t346 = m2*t345
    t347 = t337*t44
    t348 = m2*t347
    t349 = t198*t299
    t350 = t349*t36
    t351 = t34*t349
    t352 = t121*t36
    t353 = t31*t68
    t354 = t299*t353
    t355 = t320*t349
    t356 = t1*t62
    t357 = t356*t61
    t358 = t299*t357
    t359 = t325*t47
    t360 = t299*t359
    t361 = t187*t36
    t362 = t299*t361
    t363 = dphi2*t362
    t364 = dphi2*t354
    t365 = t50*t70
    t366 = t61*t8
    t367 = dphi2*t358
    t368 = dphi2*t360
    t369 = 1152*t22
    t370 = t366*t369
    t371 = t299*t370
    t372 = t365*t73
    t373 = dphi1*t299
    t374 = t372*t373
    t375 = t370*t373
    t376 = t70*t88
    t377 = t376*u
    t378 = t70*t92
    t379 = t378*u
    t380 = t134*t88
    t381 = t134*t92
    t382 = t34*t70
    t383 = t382*u
    t384 = t134*t40
    t385 = t201*t83
    t386 = m2*t385
    t387 = t201*t96
    t388 = m2*t387
    t389 = grav*t205
    t390 = t389*t83
    t391 = t389*t96
    t392 = m1*t334
    t393 = t1*t392
    t394 = m2*t201
    t395 = t393*t394
    t396 = t392*t8
    t397 = t394*t396
    t398 = t389*t393
    t399 = t389*t396
    t400 = m2*t390 + m2*t391 + m2*t398 + m2*t399 + t386*u + t388*u + t395*u + t397*u
    t401 = t168*t299 + t178*t299*u - t299*t383 - t299*t384 + t400
    t402 = t201*t8
    t403 = t299*t340
    t404 = t402*t403
    t405 = t1*t389
    t406 = t299*t44
    t407 = t402*t406
    t408 = t402*u
    t409 = t299*t54
    t410 = t205*u
    t411 = t410*t64
    t412 = t406*t411
    t413 = t0*t201
    t414 = t133*t413
    t415 = t406*t414
    t416 = t403*t411
    t417 = t403*t414
    t418 = s1*t1
    t419 = t394*t418
    t420 = 144*L1
    t421 = t389*t8
    t422 = s1*t421
    t423 = t420*t422
    t424 = 288*off
    t425 = t419*t424
    t426 = m1*t425
    t427 = t422*t424
    t428 = m2*t427
    t429 = t189*t205
    t430 = 576*t323
    t431 = t429*t430
    t432 = 576*t166
    t433 = t323*t432
    t434 = t201*t433
    t435 = m2*t205
    t436 = m1*t435
    t437 = 144*t144
    t438 = t184*t437
    t439 = t436*t438
    t440 = m1*t144
    t441 = t394*t440
    t442 = 144*t441
    t443 = t134*t442
    t444 = m2*t219
    t445 = t144*t444
    t446 = m1*t445
    t447 = t446*u
    t448 = t166*t394
    t449 = 288*t440*t448
    t450 = -m1*m2*t423 - m1*t419*t420*u + m1*t428 + t403*t405 + t404*u + t405*t406 - t405*t409 + t407*u - t408*t409 - t412 - t415 - t416 - t417 + t426*u + t431 + t434 - t439 - t443 + t447 + t449
    t451 = -m1*t132*t138 - m1*t132*t144*u - m1*t136*t138 - m1*t136*t144*u - m1*t138*t35 - m1*t138*t41 - m1*t144*t35*u - m1*t144*t41*u + t143*t299 + t149*t299*u + t153*t299 + t157*t299*u + t182*t299 + t185*t299 - t188*t299 - t190*t299 - t299*t377 - t299*t379 - t299*t380 - t299*t381 + t401 + t450
    t452 = t0**3
    t453 = t205*t452
    t454 = t299*t453
    t455 = off**3
    t456 = t121*t455
    t457 = 1152*t456
    t458 = t7**3
    t459 = t201*t458
    t460 = t299*t459
    t461 = L1**3
    t462 = t121*t461
    t463 = 144*t462
    t464 = L1*t13
    t465 = 1728*t460
    t466 = t299*t457
    t467 = t205*t8
    t468 = t0*t467
    t469 = t121*t454
    t470 = off*t2
    t471 = 864*t470
    t472 = dphi1*t192
    t473 = t209*t262
    t474 = t472*t473
    t475 = dphi2*t474
    t476 = c*t201
    t477 = c*t205
    t478 = t183*t299
    t479 = 288*t478
    t480 = t194*t479
    t481 = t472*t480
    t482 = m2*t204
    t483 = m2*t208
    t484 = 144*t201
    t485 = t462*t7
    t486 = t299*t485
    t487 = t149*t299
    t488 = t157*t299
    t489 = t478*t88
    t490 = t478*t92
    t491 = t485*t82
    t492 = t299*t376
    t493 = t299*t378
    t494 = t462*t82
    t495 = t0*t435
    t496 = t242*t3
    t497 = t299*t496
    t498 = t246*t299
    t499 = t299*t463
    t500 = t209*t229
    t501 = t472*t500
    t502 = m2*t218
    t503 = m2*t220
    t504 = t229*t476
    t505 = m2*t504
    t506 = t256*t477
    t507 = m2*t506
    t508 = t131*t194
    t509 = t472*t508
    t510 = t201*t7
    t511 = t1*t510
    t512 = 1728*t464
    t513 = 1728*t13
    t514 = t176*t299
    t515 = dphi2*t472
    t516 = t237*t262
    t517 = t515*t516
    t518 = t232*t479
    t519 = t121*t435
    t520 = t452*t519
    t521 = t424*t87
    t522 = t121*t459
    t523 = L1*t392
    t524 = t288*t3
    t525 = t280*t524
    t526 = t288*t9
    t527 = t280*t526
    t528 = 24*t3
    t529 = t272*t478
    t530 = t528*t529
    t531 = 24*t9
    t532 = t529*t531
    t533 = m2*t2
    t534 = t205*t533
    t535 = t435*t77
    t536 = t121*t535
    t537 = t121*t183
    t538 = t435*t96
    t539 = t121*t70
    t540 = t278*t280
    t541 = t3*t540
    t542 = t540*t9
    t543 = t242*t245
    t544 = t533*t543
    t545 = t394*t77
    t546 = t121*t242*t545
    t547 = 48*t3
    t548 = t273*t547
    t549 = 48*t9
    t550 = t273*t549
    t551 = t229*t237
    t552 = t521*t522
    t553 = m2*t552
    t554 = t131*t232
    t555 = t201*t72
    t556 = t121*t513
    t557 = t323*t556
    t558 = t103*t216
    t559 = t100*t195
    t560 = t121*t394*t559
    t561 = -dphi1*t482 - dphi1*t483 + dphi1*t502 + dphi1*t503 - dphi1*t530 - dphi1*t532 - dphi2*m2*t131*t477 - dphi2*m2*t262*t476 + dphi2*t299*t501 + dphi2*t299*t509 - dphi2*t481 + dphi2*t505 + dphi2*t507 - m1*t121*t148*t534 - m1*t148*t536 - m1*t519*t558 - m1*t520*t521 + m1*t544 + m1*t546 + m1*t553 + m1*t560 - m2*t522*t523 - t1*t245*t478*t513 - t1*t484*t486 + t121*t460*t471 - t121*t464*t465 - 864*t124*t205*t514 + t197*t299 + t200*t299 + t211*t299 + t212*t299 - t214*t299 - t215*t299 - t222*t299 - t223*t299 + t234*t299 + t236*t299 + t239*t299 + t241*t299 - t245*t489 - t245*t490 + t245*t497 + t245*t498 - t248*t489 - t248*t490 + t248*t497 + t248*t498 - t249*t487 - t249*t488 + t249*t492 + t249*t493 - t250*t487 - t250*t488 + t250*t492 + t250*t493 - t254*t299 - t255*t299 - t260*t299 - t261*t299 + 864*t299*t352*t555 - t299*t475 + t299*t515*t551 + t299*t515*t554 - t299*t517 - t373*t525 - t373*t527 + t373*t541 + t373*t542 + t373*t548 + t373*t550 - t388*t537 - t394*t491 - t395*t537 + t396*t519*t70 - t454*t457 + t454*t463 + t457*t460 - t460*t463 - t466*t468 + t466*t511 + t467*t557 + t468*t499 - t469*t471 + t469*t512 + t494*t495 - t515*t518 + t520*t523 + t538*t539
    t562 = 576*L1*c*dphi2*m2*off*t1 + 576*L1*c*dphi2*m2*off*t8 + 1152*L1*dphi1*dphi2*off*t0*t299*t31*t32*t7 + 1152*L1*dphi1*dphi2*off*t1*t299*t30*t32*t38 + 1152*L1*off*t0*t121*t299*t31*t32*t7 + 576*L1*off*t0*t198*t299*t31*t32*t7 + 1152*L1*off*t1*t121*t299*t30*t32*t38 + 576*L1*off*t1*t198*t299*t30*t32*t38 + 12*c*dphi1*m2*t3 + 144*c*dphi1*m2*t31*t32 + 144*c*dphi1*m2*t32*t39 + 12*c*dphi1*m2*t9 + 1152*dphi1*dphi2*t0*t13*t299*t32*t39*t7 + 288*dphi1*dphi2*t0*t2*t299*t32*t39*t7 + 1152*dphi1*dphi2*t13*t299*t30*t32*t38*t8 + 288*dphi1*dphi2*t2*t299*t30*t32*t38*t8 - dphi1*t363 - dphi1*t364 - dphi1*t367 - dphi1*t368 - dphi2*t330 - dphi2*t332 - dphi2*t336 - dphi2*t339 - dphi2*t342 - dphi2*t344 - dphi2*t346 - dphi2*t348 - dphi2*t374 - dphi2*t375 - m2*t110 - m2*t112 - m2*t116 - m2*t118 + 1152*t0*t121*t13*t299*t32*t39*t7 + 288*t0*t121*t2*t299*t32*t39*t7 + 576*t0*t13*t198*t299*t32*t39*t7 + 144*t0*t198*t2*t299*t32*t39*t7 - t1*t355*t60 + 1152*t121*t13*t299*t30*t32*t38*t8 + 288*t121*t2*t299*t30*t32*t38*t8 - t121*t354 - t121*t358 - t121*t360 - t121*t371 - t122*t351 - t125*t350 - t127*t324 + 576*t13*t198*t299*t30*t32*t38*t8 - t131*t349*t365 - t187*t299*t352 + 144*t198*t2*t299*t30*t32*t38*t8 - t31*t355*t64 - t349*t366*t54 - t451 - t561
    t563 = grav*t146
    t564 = s1*t7
    t565 = m1*t564
    t566 = t565*t88
    t567 = t566*u
    t568 = grav*t155
    t569 = t565*t92
    t570 = t569*u
    t571 = grav*t160
    t572 = grav*t171
    t573 = grav*t174
    t574 = t34*t565
    t575 = t574*u
    t576 = t40*t565
    t577 = t576*u
    t578 = t167*t72
    t579 = m2*t578
    t580 = t579*u
    t581 = t70*u
    t582 = t125*t581
    t583 = t166*t187
    t584 = 144*L1*grav*m2*t30*t32*t38*t7 + 12*L1*m2*t3*t7*u + 144*L1*m2*t32*t39*t7*u + 12*L1*m2*t7*t9*u + 24*grav*m2*off*t0*t3 + 288*grav*m2*off*t0*t31*t32 + 24*grav*m2*off*t0*t9 - grav*t135 - grav*t137 + 288*m2*off*t0*t30*t32*t38*u - m2*t582 - m2*t583 - t244*u - t247*u - t563 + t567 - t568 + t570 - t571 - t572 - t573 + t575 + t577 - t580
    t585 = t195*t476
    t586 = t167*t186
    t587 = t194*t216
    t588 = t193*t587
    t589 = t195*t209
    t590 = t193*t589
    t591 = t199*t587
    t592 = t199*t589
    t593 = t202*t477
    t594 = t206*t476
    t595 = t194*t202
    t596 = t193*t595
    t597 = t206*t209
    t598 = t193*t597
    t599 = t199*t595
    t600 = t199*t597
    t601 = t216*t477
    t602 = m2*t177
    t603 = t225*t262
    t604 = dphi1*t603
    t605 = t131*t228
    t606 = dphi1*t605
    t607 = t195*t238
    t608 = t232*t259
    t609 = t195*t240
    t610 = t216*t235
    t611 = t237*t253
    t612 = t202*t233
    t613 = t206*t240
    t614 = t202*t235
    t615 = t225*t229
    t616 = dphi1*t615
    t617 = t228*t256
    t618 = dphi1*t617
    t619 = t131*t268
    t620 = dphi1*t619
    t621 = dphi2*t262
    t622 = dphi1*t265
    t623 = t272*t289
    t624 = t280*t72
    t625 = t271*t624
    t626 = t272*t291
    t627 = t276*t624
    t628 = t272*t279
    t629 = 24*t183
    t630 = t243*t280
    t631 = t629*t630
    t632 = t272*t282
    t633 = t275*t629
    t634 = t280*t633
    t635 = t256*t268
    t636 = dphi1*t635
    t637 = t229*t622
    t638 = 576*t533
    t639 = t61*t64
    t640 = 2304*m2
    t641 = t13*t640
    t642 = t121*t641
    t643 = t640*t72
    t644 = t643*t70
    t645 = t432*t61
    t646 = t187*t581
    t647 = t134*t187
    t648 = m2*t262
    t649 = -m2*t645 - m2*t646 + m2*t647 + t61*t648*u
    t650 = -dphi1*t623 - dphi1*t625 - dphi1*t626 - dphi1*t627 + dphi1*t628 + dphi1*t631 + dphi1*t632 + dphi1*t634 - dphi2*t585 - dphi2*t593 + dphi2*t594 + dphi2*t601 - dphi2*t604 - dphi2*t606 + dphi2*t616 + dphi2*t618 - dphi2*t620 + dphi2*t636 + dphi2*t637 + grav*t179 - m2*t586 - m2*t588 - m2*t590 - m2*t591 - m2*t592 + m2*t596 + m2*t598 + m2*t599 + m2*t600 - m2*t607 - m2*t608 - m2*t609 - m2*t610 + m2*t611 + m2*t612 + m2*t613 + m2*t614 - t121*t37 - t121*t43 - t121*t48 - t121*t51 + t121*t56 + t121*t59 + t121*t638*t639 + t124*t35 - t127*t129 + t127*t46 - t128*t644 + t130*t49 - t130*t55*t8 + t135*t245 + t135*t248 + t137*t245 + t137*t248 - t150*t245 - t150*t248 - t158*t245 - t158*t248 + t181*t41 - t184*t35 + t184*t41 - t244*t249 - t244*t250 - t247*t249 - t247*t250 + t249*t251 + t249*t252 + t250*t251 + t250*t252 + t352*t41 - t571 - t580 + t602*t72*u - t621*t622 + t639*t642 + t649
    t651 = t47*t73
    t652 = t651*t71
    t653 = t50*t74
    t654 = m2*t353
    t655 = t39*t68
    t656 = m2*t655
    t657 = t47*t65
    t658 = t50*t65
    t659 = m2*t369
    t660 = t366*t659
    t661 = t1*t61
    t662 = t659*t661
    t663 = t187*t42
    t664 = m2*t663
    t665 = m2*t361
    t666 = t366*t63
    t667 = t63*t661
    t668 = t652 - t653 - t654 + t656 - t657 + t658 - t660 + t662 + t664 - t665 + t666 - t667
    t669 = t107**(-2)
    t670 = t298*t669
    t671 = dphi2*t257
    t672 = dphi2*t263
    t673 = t183*t201
    t674 = 24*t673
    t675 = t243*t674
    t676 = dphi1*t675
    t677 = t275*t674
    t678 = dphi1*t677
    t679 = t205*t289
    t680 = dphi1*t679
    t681 = t205*t291
    t682 = dphi1*t681
    t683 = dphi2*t293
    t684 = dphi2*t295
    t685 = t109 + t111 + t115 + t117
    t686 = 1152*L1*dphi1*m2*off*t0*t32*t39*t7 + 1152*L1*dphi1*m2*off*t30*t32*t38*t8 + 24*L1*dphi1*m2*s2*t0*t3*t30 + 24*L1*dphi1*m2*s2*t0*t30*t9 + 288*L1*dphi1*m2*t0*t192*t209 + 288*L1*dphi1*m2*t0*t192*t30*t39 + 24*L1*dphi2*m2*s2*t0*t3*t30 + 24*L1*dphi2*m2*s2*t0*t30*t9 + 288*L1*dphi2*m2*t0*t192*t209 + 288*L1*dphi2*m2*t0*t192*t30*t39 + 48*dphi1*m2*off*s2*t3*t38*t7 + 48*dphi1*m2*off*s2*t38*t7*t9 + 576*dphi1*m2*off*t192*t194*t7 + 576*dphi1*m2*off*t192*t31*t38*t7 + 1152*dphi1*m2*t0*t13*t31*t32*t7 + 288*dphi1*m2*t0*t2*t31*t32*t7 + 1152*dphi1*m2*t1*t13*t30*t32*t38 + 288*dphi1*m2*t1*t2*t30*t32*t38 - dphi1*t652 - dphi1*t656 - dphi1*t658 - dphi1*t662 - dphi1*t664 - dphi1*t666 + 48*dphi2*m2*off*s2*t3*t38*t7 + 48*dphi2*m2*off*s2*t38*t7*t9 + 576*dphi2*m2*off*t192*t194*t7 + 576*dphi2*m2*off*t192*t31*t38*t7 - t258 - t264 - t286 - t287 - t290 - t292 - t294 - t296 - t671 - t672 - t676 - t678 - t680 - t682 - t683 - t684 - t685
    t687 = 48*t555
    t688 = t204 + t208 - t218 - t220 + t685
    t689 = dphi1*t205*t279 + dphi1*t205*t282 + dphi1*t271*t555 + dphi1*t275*t687 + dphi2*t226 + dphi2*t230 + dphi2*t266 + dphi2*t269 + t227 + t231 - t258 - t264 + t267 + t270 + t274 + t277 + t281 + t283 - t286 - t287 - t290 - t292 - t294 - t296 - t671 - t672 - t676 - t678 - t680 - t682 - t683 - t684 + t688
    t690 = t187*t72
    t691 = 144*L1*m2*t30*t32*t38*t7 + 24*m2*off*t0*t3 + 288*m2*off*t0*t31*t32 + 24*m2*off*t0*t9 - m2*t690 - t135 - t137 - t146 - t155 - t160 - t171 - t174
    t692 = t139 + t145*u + t151 + t154*u + t162 + t164 + t170*u + t173*u
    t693 = -t692
    t694 = 12*t32
    t695 = t2*t694
    t696 = t31*t695
    t697 = t39*t695
    t698 = t694*t77
    t699 = t31*t698
    t700 = t39*t698
    t701 = -t10 - t101 - t102 - t104 - t105 - t4 - t696 - t697 - t699 - t700 - t78 - t80 - t90 - t91 - t94 - t95
    t702 = t284*t528
    t703 = t284*t531
    t704 = t121*t673
    t705 = t198*t673
    t706 = t194*t256
    t707 = t472*t706
    t708 = t232*t256
    t709 = t121*t320
    t710 = t39*t709
    t711 = t121*t54
    t712 = t709*t8
    t713 = 24*L1*dphi1*dphi2*s2*t0*t3*t30 + 24*L1*dphi1*dphi2*s2*t0*t30*t9 + 288*L1*dphi1*dphi2*t0*t192*t209 + 288*L1*dphi1*dphi2*t0*t192*t30*t39 + 144*L1*grav*t0*t30*t32*t38 + 576*L1*off*t0*t121*t32*t39*t7 + 576*L1*off*t121*t30*t32*t38*t8 + 12*L1*s2*t0*t121*t3*t30 + 12*L1*s2*t0*t121*t30*t9 + 12*L1*s2*t0*t198*t3*t30 + 12*L1*s2*t0*t198*t30*t9 + 144*L1*t0*t121*t192*t209 + 144*L1*t0*t121*t192*t30*t39 + 144*L1*t0*t192*t198*t209 + 144*L1*t0*t192*t198*t30*t39 + 144*L1*t30*t32*t38*t7*u + 48*dphi1*dphi2*off*s2*t3*t38*t7 + 48*dphi1*dphi2*off*s2*t38*t7*t9 + 576*dphi1*dphi2*off*t192*t194*t7 + 576*dphi1*dphi2*off*t192*t31*t38*t7 - dphi1*t525 - dphi1*t527 - dphi1*t702 - dphi1*t703 - dphi2*t707 + 24*grav*off*t3*t7 + 288*grav*off*t32*t39*t7 + 24*grav*off*t7*t9 + 24*off*s2*t121*t3*t38*t7 + 24*off*s2*t121*t38*t7*t9 + 24*off*s2*t198*t3*t38*t7 + 24*off*s2*t198*t38*t7*t9 + 24*off*t0*t3*u + 288*off*t0*t31*t32*u + 24*off*t0*t9*u + 288*off*t121*t192*t194*t7 + 288*off*t121*t192*t31*t38*t7 + 288*off*t192*t194*t198*t7 + 288*off*t192*t198*t31*t38*t7 + 576*t0*t121*t13*t31*t32*t7 + 144*t0*t121*t2*t31*t32*t7 + 576*t1*t121*t13*t30*t32*t38 + 144*t1*t121*t2*t30*t32*t38 - t123*t40 - t126 - t130*t131*t70 - t149*t249 - t149*t250 - t157*t249 - t157*t250 - t188 - t190 - t214 - t215 - t222 - t223 - t254 - t255 - t260 - t261 - t377 - t379 - t380 - t381 - t383 - t384 - t475 - t515*t708 - t517 - t60*t712 - t64*t710 - t661*t711 - t704*t88 - t704*t92 - t705*t88 - t705*t92
    t714 = t61*t70
    t715 = 48*L1*off*t1*t3 + 576*L1*off*t1*t31*t32 + 48*L1*off*t1*t9 + 48*L1*off*t3*t8 + 576*L1*off*t32*t39*t8 + 48*L1*off*t8*t9 + 1152*t0*t13*t30*t32*t38*t7 + 288*t0*t2*t30*t32*t38*t7 - t16 - t18 - t20 - t21 - t305 - t306 - t308 - t309 - t318 - t319 - t321 - t322 - t714*t73
    t716 = dphi2*t88
    t717 = dphi2*t92
    t718 = dphi2*t40
    t719 = dphi2*t34
    t720 = -dphi1*t34 - dphi1*t40 - dphi1*t88 - dphi1*t92 + t716 + t717 + t718 + t719
    t721 = dphi2*t203 + dphi2*t207 - dphi2*t217 - dphi2*t219 + t720
    t722 = t132*t565
    t723 = t136*t565
    t724 = t0*t205
    t725 = t133*t724
    t726 = t406*t725
    t727 = t403*t725
    t728 = t41*t565
    t729 = t35*t565
    t730 = t201*u
    t731 = t64*t730
    t732 = t403*t731
    t733 = t176*t187
    t734 = t1*t205
    t735 = t409*t734
    t736 = t406*t731
    t737 = t189*t201*t430
    t738 = t435*u
    t739 = t738*t8
    t740 = s1*t420
    t741 = t739*t740
    t742 = grav*t394
    t743 = t418*t424
    t744 = t742*t743
    t745 = t205*t433
    t746 = t195*t441
    t747 = t746*u
    t748 = t134*t437
    t749 = t436*t748
    t750 = t184*t442
    t751 = 288*t144
    t752 = t166*t751
    t753 = t436*t752
    t754 = t184*t40
    t755 = t178*t299
    t756 = -144*L1*grav*t0*t299*t31*t32 + grav*t386 + grav*t388 + grav*t395 + grav*t397 + grav*t755 - 144*m1*m2*s2*t1*t30*t87*u - 12*m1*m2*s2*t2*t30*u - 12*m1*m2*s2*t30*t77*u - 144*m1*m2*s2*t30*t8*t87*u - 288*off*t299*t32*t39*t7*u + t299*t754
    t757 = 144*L1*grav*m1*m2*s1*s2*t1*t38 + 576*L1*grav*off*s2*t299*t38*t8 + 12*L1*grav*t0*t299*t3 + 12*L1*grav*t0*t299*t9 + 144*L1*t0*t299*t30*t32*t38*u + 12*grav*m1*m2*s1*t0*t3 + 144*grav*m1*m2*s1*t0*t31*t32 + 144*grav*m1*m2*s1*t0*t32*t39 + 12*grav*m1*m2*s1*t0*t9 + 288*grav*off*t299*t30*t32*t38*t7 - grav*t404 - grav*t407 - grav*t487 - grav*t488 + 288*m1*m2*off*s1*s2*t30*t8*u - m1*t741 - m1*t744 + 24*off*t299*t3*t7*u + 24*off*t299*t7*t9*u + 576*s2*t1*t13*t299*t30*u + 144*s2*t1*t2*t299*t30*u - t125*t134*t299 - t184*t299*t88 - t184*t299*t92 - t299*t733*u - t722*u - t723*u + t726 + t727 - t728*u - t729*u - t732 - t735*u - t736 + t737 - t745 + t747 + t749 - t750 - t753 - t756
    t758 = t181*t40
    t759 = grav*t201
    t760 = t1*t403
    t761 = t201*t452
    t762 = t205*t458
    t763 = t177*t189
    t764 = t167*t36
    t765 = t299*t764
    t766 = t177*t299
    t767 = t1*t406
    t768 = t1*t50
    t769 = t299*t62
    t770 = t768*t769
    t771 = t47*t8
    t772 = t769*t771
    t773 = m2*t593
    t774 = t0*t402
    t775 = t194*t229
    t776 = t515*t775
    t777 = t209*t515
    t778 = dphi2*t765
    t779 = t42*t766
    t780 = dphi2*t779
    t781 = m2*t585
    t782 = m2*t256*t476
    t783 = t477*t648
    t784 = t410*t8
    t785 = t262*t61
    t786 = t785*u
    t787 = dphi2*t770
    t788 = dphi2*t772
    t789 = t369*t53
    t790 = t299*t789
    t791 = t369*t58
    t792 = t299*t791
    t793 = t299*t512
    t794 = t245*t452
    t795 = t249*t458
    t796 = t278*t3
    t797 = t272*t373
    t798 = t280*t528
    t799 = t478*t798
    t800 = t278*t9
    t801 = t280*t531
    t802 = t478*t801
    t803 = t418*t420
    t804 = t738*t803
    t805 = t394*t452
    t806 = t121*t805
    t807 = t458*t519
    t808 = t237*t515
    t809 = t232*t515
    t810 = t229*t809
    t811 = grav*t402
    t812 = s1*t424
    t813 = m2*t812
    t814 = t811*t813
    t815 = 576*t61
    t816 = dphi2*t790
    t817 = dphi2*t792
    t818 = 1152*t61
    t819 = t299*t818
    t820 = t478*t734
    t821 = 2304*t13
    t822 = t639*t821
    t823 = 4608*t13
    t824 = t639*t823
    t825 = t299*t824
    t826 = t183*t519
    t827 = dphi2*t122
    t828 = dphi2*t373
    t829 = 144*L1*c*dphi1*m2*s2*t38*t7 + 288*L1*c*dphi2*m2*s2*t0*t30 + 4608*L1*dphi1*dphi2*off*t0*t299*t30*t32*t38*t7 + 1152*L1*dphi1*dphi2*off*t1*t299*t32*t39 + 1152*L1*dphi1*dphi2*off*t299*t31*t32*t8 + 144*L1*grav*m1*m2*s1*s2*t38*t8 + 576*L1*grav*off*s2*t1*t299*t38 + 4608*L1*off*t0*t121*t299*t30*t32*t38*t7 + 2304*L1*off*t0*t198*t299*t30*t32*t38*t7 + 1152*L1*off*t1*t121*t299*t32*t39 + 576*L1*off*t1*t198*t299*t32*t39 + 1152*L1*off*t121*t299*t31*t32*t8 + 576*L1*off*t198*t299*t31*t32*t8 + 288*L1*t0*t299*t30*t32*t38*u + 144*L1*t299*t31*t32*t7*u + 288*c*dphi1*m2*off*s2*t0*t30 + 576*c*dphi2*m2*off*s2*t38*t7 + 48*dphi1*dphi2*off*s2*t0*t299*t3*t38 + 48*dphi1*dphi2*off*s2*t0*t299*t38*t9 + 48*dphi1*dphi2*off*s2*t299*t3*t30*t7 + 48*dphi1*dphi2*off*s2*t299*t30*t7*t9 + 576*dphi1*dphi2*off*t0*t192*t194*t299 + 576*dphi1*dphi2*off*t0*t192*t299*t31*t38 + 576*dphi1*dphi2*off*t192*t209*t299*t7 + 576*dphi1*dphi2*off*t192*t299*t30*t39*t7 + 1152*dphi1*dphi2*t1*t13*t299*t31*t32 + 288*dphi1*dphi2*t1*t2*t299*t31*t32 + 1152*dphi1*dphi2*t13*t299*t32*t39*t8 + 288*dphi1*dphi2*t2*t299*t32*t39*t8 - dphi1*t773 - dphi1*t778 - dphi1*t780 - dphi1*t781 - dphi1*t787 - dphi1*t788 - dphi1*t799 - dphi1*t802 - dphi1*t816 - dphi1*t817 - dphi2*t782 - dphi2*t783 + 288*grav*off*t0*t299*t32*t39 + 576*grav*off*t299*t30*t32*t38*t7 + 288*m1*m2*off*s1*s2*t1*t30*u + 24*m1*m2*off*s2*t0*t121*t2*t38 + 24*m1*m2*off*s2*t0*t121*t38*t77 + 288*m1*m2*off*s2*t0*t121*t38*t8*t87 + 288*m1*m2*off*s2*t1*t121*t30*t7*t87 + 24*m1*m2*off*s2*t121*t2*t30*t7 + 288*m1*m2*off*s2*t121*t30*t458*t87 + 24*m1*m2*off*s2*t121*t30*t7*t77 + 288*m1*m2*off*s2*t121*t38*t452*t87 - m1*t804 - m1*t814 + 864*off*s2*t0*t121*t2*t299*t38*t8 + 24*off*s2*t0*t121*t299*t3*t38 + 24*off*s2*t0*t121*t299*t38*t9 + 24*off*s2*t0*t198*t299*t3*t38 + 24*off*s2*t0*t198*t299*t38*t9 + 864*off*s2*t1*t121*t2*t299*t30*t7 + 864*off*s2*t121*t2*t299*t30*t458 + 864*off*s2*t121*t2*t299*t38*t452 + 24*off*s2*t121*t299*t3*t30*t7 + 24*off*s2*t121*t299*t30*t7*t9 + 24*off*s2*t198*t299*t3*t30*t7 + 24*off*s2*t198*t299*t30*t7*t9 + 288*off*t0*t121*t192*t194*t299 + 288*off*t0*t121*t192*t299*t31*t38 + 288*off*t0*t192*t194*t198*t299 + 288*off*t0*t192*t198*t299*t31*t38 + 288*off*t121*t192*t209*t299*t7 + 288*off*t121*t192*t299*t30*t39*t7 + 288*off*t192*t198*t209*t299*t7 + 288*off*t192*t198*t299*t30*t39*t7 + 1152*s2*t0*t121*t299*t38*t455*t8 + 1152*s2*t1*t121*t299*t30*t455*t7 + 1152*s2*t121*t299*t30*t455*t458 + 1152*s2*t121*t299*t38*t452*t455 + 576*s2*t13*t299*t30*t8*u + 144*s2*t2*t299*t30*t8*u - t0*t394*t494 + 1152*t1*t121*t13*t299*t31*t32 + 288*t1*t121*t2*t299*t31*t32 + 576*t1*t13*t198*t299*t31*t32 + 144*t1*t198*t2*t299*t31*t32 - t1*t355*t39 + 1152*t121*t13*t299*t32*t39*t8 + 288*t121*t2*t299*t32*t39*t8 - t121*t765 - t121*t770 - t121*t772 - t121*t790 - t121*t792 - t121*t825 - t122*t349*t815 - t123*t819 - t124*t766 + 576*t13*t198*t299*t32*t39*t8 + 144*t198*t2*t299*t32*t39*t8 - t198*t311 - t198*t313 - t245*t492 - t245*t493 - t248*t492 - t248*t493 - t249*t489 - t249*t490 - t250*t489 - t250*t490 - t299*t596 - t299*t598 - t299*t599 - t299*t600 - t299*t611 - t299*t612 - t299*t613 - t299*t614 - t299*t647 - t299*t758 - t299*t763 - t299*t776 - t299*t786 - t299*t810 - t31*t355*t8 - t349*t822 - t350*t40 - t351*t42 - t373*t818*t827 - t388*t539 - t393*t826 - t397*t539 - t402*t557 - t409*t784 - t435*t491 - t479*t777 - t479*t808 - 144*t486*t734 - t499*t761 - t499*t762 - t499*t774 - t523*t806 - t523*t807 - t537*t538 - t556*t820 - t726 - t727 + t732 + t736 - t737 + t745 - t747 - t749 + t750 + t753 - t756 - t759*t760 - t759*t767 - t793*t794 - t793*t795 - t796*t797 - t797*t800 - t824*t828
    t830 = t651*t70
    t831 = t299*t830
    t832 = t299*t372
    t833 = t299*t655
    t834 = t325*t50
    t835 = t299*t834
    t836 = t369*t661
    t837 = t299*t836
    t838 = t299*t663
    t839 = t366*t62
    t840 = t299*t839
    t841 = -t354 - t358 - t360 - t362 - t371 + t831 - t832 + t833 + t835 + t837 + t838 + t840
    t842 = t326**(-2)
    t843 = t562*t842
    t844 = 2304*t455
    t845 = t460*t844
    t846 = t299*t509
    t847 = dphi2*t192
    t848 = t299*t508*t847
    t849 = t299*t501
    t850 = 288*t461
    t851 = t454*t850
    t852 = t299*t500*t847
    t853 = t460*t850
    t854 = t473*t847
    t855 = t454*t844
    t856 = 3456*t464
    t857 = t454*t856
    t858 = t373*t844
    t859 = t299*t821
    t860 = t661*t859
    t861 = t47*t64
    t862 = t859*t861
    t863 = t465*t470
    t864 = t299*t472*t554
    t865 = t299*t815
    t866 = t36*t865
    t867 = t299*t47
    t868 = 576*t867
    t869 = t122*t868
    t870 = t299*t554*t847
    t871 = t299*t472*t551
    t872 = t373*t850
    t873 = t299*t551*t847
    t874 = t547*t555
    t875 = dphi1*t299*t874
    t876 = t687*t9
    t877 = dphi1*t299*t876
    t878 = t299*t548
    t879 = t299*t550
    t880 = dphi1*t205
    t881 = t278*t880
    t882 = t299*t3*t881
    t883 = t299*t881*t9
    t884 = 24*t461
    t885 = m1*t884
    t886 = dphi1*t435
    t887 = t0*t886
    t888 = t299*t541
    t889 = t299*t542
    t890 = t201*t478
    t891 = t528*t890
    t892 = t531*t890
    t893 = dphi1*t394
    t894 = t7*t885
    t895 = t524*t880
    t896 = t526*t880
    t897 = t472*t516
    t898 = 576*t50
    t899 = t299*t898
    t900 = t122*t899
    t901 = t42*t865
    t902 = t516*t847
    t903 = 1728*t470
    t904 = t454*t903
    t905 = t50*t64
    t906 = t859*t905
    t907 = t366*t859
    t908 = t460*t856
    t909 = 3456*t13
    t910 = t467*t909
    t911 = t323*t910
    t912 = 2304*t72
    t913 = t365*t912
    t914 = 2304*t22
    t915 = t373*t914
    t916 = dphi1*t36
    t917 = 1728*t555
    t918 = t299*t917
    t919 = dphi2*t832
    t920 = dphi2*t371
    t921 = m2*t459
    t922 = dphi1*t921
    t923 = m1*t87
    t924 = 576*off
    t925 = t923*t924
    t926 = t452*t886
    t927 = 288*L1
    t928 = t923*t927
    t929 = t533*t687
    t930 = m1*t929
    t931 = 48*t72
    t932 = m1*t77
    t933 = t893*t932
    t934 = m1*t535
    t935 = t278*t934
    t936 = t288*t534
    t937 = m1*t936
    t938 = t288*t934
    t939 = t42*t514
    t940 = t47*t912
    t941 = t323*t940
    t942 = t1*t909
    t943 = t890*t942
    t944 = t100*t131
    t945 = t893*t944
    t946 = t103*t886
    t947 = t229*t946
    t948 = t100*t256
    t949 = t893*t948
    t950 = t262*t946
    t951 = m2*t109 + m2*t111 + m2*t115 + m2*t117
    t952 = -dphi1*t845 - dphi1*t851 + dphi1*t853 + dphi1*t855 - dphi1*t857 - dphi1*t860 - dphi1*t862 - dphi1*t863 - dphi1*t866 - dphi1*t869 + dphi1*t891 + dphi1*t892 + dphi1*t900 + dphi1*t901 + dphi1*t904 + dphi1*t906 + dphi1*t907 + dphi1*t908 - dphi1*t911 - dphi1*t930 - dphi1*t935 + dphi1*t937 + dphi1*t938 + dphi1*t941 + dphi1*t943 + dphi2*t831 + dphi2*t833 + dphi2*t835 + dphi2*t837 + dphi2*t838 + dphi2*t840 - m1*t945 - m1*t947 + m1*t949 + m1*t950 + t299*t474 + t299*t525 + t299*t527 + t299*t854 + t299*t895 + t299*t896 + t299*t897 + t299*t902 - t363 - t364 - t366*t915 - t367 - t368 - t373*t913 + t468*t858 - t468*t872 + t472*t518 + t480*t847 + t481 + t482 + t483 - t502 - t503 - t511*t858 + t511*t872 + t518*t847 + t530 + t532 + t629*t933 + t661*t915 - t846 - t848 - t849 - t852 - t864 - t870 - t871 - t873 - t875 - t877 - t878 - t879 + 1728*t880*t939 - t882 - t883 - t885*t887 - t888 - t889 + t893*t894 - t916*t918 - t919 - t920 - t922*t925 + t922*t928 + t925*t926 - t926*t928 - t931*t933 + t951
    t953 = 576*L1*c*m2*off*t1 + 576*L1*c*m2*off*t8 + 1152*L1*dphi1*off*t0*t299*t31*t32*t7 + 1152*L1*dphi1*off*t1*t299*t30*t32*t38 + 24*L1*dphi1*s2*t299*t3*t38*t7 + 24*L1*dphi1*s2*t299*t38*t7*t9 + 288*L1*dphi1*t192*t194*t299*t7 + 288*L1*dphi1*t192*t299*t31*t38*t7 + 1152*L1*dphi2*off*t0*t299*t31*t32*t7 + 1152*L1*dphi2*off*t1*t299*t30*t32*t38 + 24*L1*dphi2*s2*t299*t3*t38*t7 + 24*L1*dphi2*s2*t299*t38*t7*t9 + 288*L1*dphi2*t192*t194*t299*t7 + 288*L1*dphi2*t192*t299*t31*t38*t7 + 576*c*m2*off*s2*t0*t38 + 576*c*m2*off*s2*t30*t7 + 48*dphi1*off*s2*t0*t299*t3*t30 + 48*dphi1*off*s2*t0*t299*t30*t9 + 576*dphi1*off*t0*t192*t209*t299 + 576*dphi1*off*t0*t192*t299*t30*t39 + 1152*dphi1*t0*t13*t299*t32*t39*t7 + 288*dphi1*t0*t2*t299*t32*t39*t7 + 1152*dphi1*t13*t299*t30*t32*t38*t8 + 288*dphi1*t2*t299*t30*t32*t38*t8 - dphi1*t354 - dphi1*t358 - dphi1*t360 - dphi1*t362 + 48*dphi2*off*s2*t0*t299*t3*t30 + 48*dphi2*off*s2*t0*t299*t30*t9 + 576*dphi2*off*t0*t192*t209*t299 + 576*dphi2*off*t0*t192*t299*t30*t39 + 1152*dphi2*t0*t13*t299*t32*t39*t7 + 288*dphi2*t0*t2*t299*t32*t39*t7 + 1152*dphi2*t13*t299*t30*t32*t38*t8 + 288*dphi2*t2*t299*t30*t32*t38*t8 - t330 - t332 - t336 - t339 - t342 - t344 - t346 - t348 - t363 - t364 - t367 - t368 - t374 - t375 - t505 - t507 - t846 - t848 - t849 - t852 - t864 - t870 - t871 - t873 - t875 - t877 - t878 - t879 - t882 - t883 - t888 - t889 - t919 - t920 - t951
    t954 = t131*t323
    t955 = 144*L1*m1*m2*s1*s2*t0*t30*t7 + 144*L1*m1*m2*s1*s2*t1*t38 + 576*L1*off*s2*t299*t38*t8 + 12*L1*t0*t299*t3 + 144*L1*t0*t299*t31*t32 + 12*L1*t0*t299*t9 + 12*m1*m2*s1*t0*t3 + 144*m1*m2*s1*t0*t31*t32 + 144*m1*m2*s1*t0*t32*t39 + 12*m1*m2*s1*t0*t9 + 288*off*t299*t30*t32*t38*t7 + 576*s2*t0*t13*t299*t30*t7 + 144*s2*t0*t2*t299*t30*t7 - t125*t478 - t205*t954 - t386 - t388 - t395 - t397 - t404 - t407 - t426 - t446 - t487 - t488 - t755
    t956 = 12*t389
    t957 = 12*t201
    t958 = t533*t957
    t959 = t77*t956
    t960 = t77*t957
    t961 = m2*t960
    t962 = 12*t462
    t963 = t435*t962
    t964 = t334*t421
    t965 = t1*t334
    t966 = t389*t965
    t967 = t334*t402
    t968 = m2*t967
    t969 = t394*t965
    t970 = 12*t70
    t971 = L1*t334
    t972 = t70*t8
    t973 = t519*t972
    t974 = 144*L1*grav*m2*s1*s2*t0*t38*t7 + 144*L1*grav*m2*s1*s2*t30*t8 + 144*L1*m2*s1*s2*t0*t30*t7*u + 144*L1*m2*s1*s2*t1*t38*u + 144*L1*m2*s2*t1*t121*t38*t7*t87 + 144*L1*m2*s2*t121*t38*t458*t87 + 12*L1*m2*s2*t121*t38*t7*t77 - dphi2*t329 - dphi2*t331 - dphi2*t335 - dphi2*t338 + 12*grav*m2*s1*t3*t7 + 144*grav*m2*s1*t31*t32*t7 + 144*grav*m2*s1*t32*t39*t7 + 12*grav*m2*s1*t7*t9 + 24*m2*off*s2*t0*t121*t2*t30 + 24*m2*off*s2*t0*t121*t30*t77 + 288*m2*off*s2*t0*t121*t30*t8*t87 + 288*m2*off*s2*t121*t30*t452*t87 + 12*m2*s1*t0*t3*u + 144*m2*s1*t0*t31*t32*u + 144*m2*s1*t0*t32*t39*u + 12*m2*s1*t0*t9*u + 12*m2*s2*t121*t38*t461*t7 - m2*t959 - m2*t964 - m2*t966 - t0*t963 - t334*t973 - t425*u - t428 - t445*u - t448*t751 - t520*t971 - t533*t956 - t536*t970 - t544 - t546 - t553 - t560 - t958*u - t961*u - t968*u - t969*u
    t975 = m2*t78
    t976 = m2*t80
    t977 = -m2*t696 - m2*t697 - m2*t699 - m2*t700 - t11 - t300 - t301 - t302 - t303 - t314 - t315 - t316 - t317 - t5 - t975 - t976
    t978 = 48*t166
    t979 = t201*t393
    t980 = t201*t396
    t981 = 288*t42
    t982 = t394*t981
    t983 = t193*t500
    t984 = t199*t500
    t985 = 288*t36
    t986 = t389*t985
    t987 = t262*t47
    t988 = m2*t987
    t989 = t988*u
    t990 = t432*t50
    t991 = m2*t990
    t992 = t193*t508
    t993 = t199*t508
    t994 = t402*t63
    t995 = t249*t70
    t996 = t2*t543
    t997 = t543*t77
    t998 = t245*t72
    t999 = t248*t72
    t1000 = t121*t453
    t1001 = t730*t743
    t1002 = m2*t229
    t1003 = t519*t850
    t1004 = 576*dphi1
    t1005 = t228*t70
    t1006 = t1004*t1005
    t1007 = m2*t131
    t1008 = m2*t815
    t1009 = t1008*t352
    t1010 = t130*t64
    t1011 = t1010*t638
    t1012 = t225*t73
    t1013 = dphi1*t1012
    t1014 = t641*t661
    t1015 = t1014*t121
    t1016 = t1010*t641
    t1017 = t280*t70
    t1018 = t1017*t271
    t1019 = t1017*t276
    t1020 = 96*t243
    t1021 = t1020*t273
    t1022 = 96*t275
    t1023 = t1022*t273
    t1024 = t219*t440
    t1025 = m1*t201
    t1026 = t1004*t70
    t1027 = dphi2*t1026
    t1028 = t1008*t36
    t1029 = dphi1*dphi2
    t1030 = t638*t861
    t1031 = t435*t70
    t1032 = 1152*t1031
    t1033 = 1152*t70
    t1034 = t641*t861
    t1035 = t127*t644
    t1036 = t22*t640
    t1037 = t1036*t366
    t1038 = t1037*t121
    t1039 = t365*t643
    t1040 = m2*t187
    t1041 = -576*grav*m2*off*t0*t30*t32*t38 - 576*m2*off*t30*t32*t38*t7*u + t1040*t181 + t1040*t184
    t1042 = 144*L1*c*dphi1*s2*t0*t38 + 144*L1*c*dphi1*s2*t30*t7 + 576*L1*c*dphi2*off*t1 + 576*L1*c*dphi2*off*t8 + 2304*L1*dphi1*dphi2*m2*off*t0*t31*t32*t7 + 2304*L1*dphi1*dphi2*m2*off*t1*t30*t32*t38 + 48*L1*dphi1*dphi2*m2*s2*t3*t38*t7 + 48*L1*dphi1*dphi2*m2*s2*t38*t7*t9 + 576*L1*dphi1*dphi2*m2*t192*t194*t7 + 576*L1*dphi1*dphi2*m2*t192*t31*t38*t7 + 144*L1*grav*m1*s1*s2*t0*t38*t7 + 144*L1*grav*m1*s1*s2*t30*t8 + 1152*L1*grav*m2*off*s2*t1*t30 + 24*L1*grav*m2*t3*t7 + 288*L1*grav*m2*t32*t39*t7 + 24*L1*grav*m2*t7*t9 + 144*L1*m1*s1*s2*t0*t30*t7*u + 144*L1*m1*s1*s2*t1*t38*u + 144*L1*m1*s2*t1*t121*t38*t7*t87 + 144*L1*m1*s2*t121*t38*t458*t87 + 12*L1*m1*s2*t121*t38*t7*t77 + 1152*L1*m2*off*s2*t38*t8*u + 2304*L1*m2*off*t0*t121*t31*t32*t7 + 1152*L1*m2*off*t0*t198*t31*t32*t7 + 2304*L1*m2*off*t1*t121*t30*t32*t38 + 1152*L1*m2*off*t1*t198*t30*t32*t38 + 3456*L1*m2*s2*t1*t121*t13*t38*t7 + 3456*L1*m2*s2*t121*t13*t38*t458 + 24*L1*m2*s2*t121*t3*t38*t7 + 24*L1*m2*s2*t121*t38*t7*t9 + 24*L1*m2*s2*t198*t3*t38*t7 + 24*L1*m2*s2*t198*t38*t7*t9 + 24*L1*m2*t0*t3*u + 288*L1*m2*t0*t31*t32*u + 24*L1*m2*t0*t9*u + 288*L1*m2*t121*t192*t194*t7 + 288*L1*m2*t121*t192*t31*t38*t7 + 288*L1*m2*t192*t194*t198*t7 + 288*L1*m2*t192*t198*t31*t38*t7 + 576*c*dphi2*off*s2*t0*t38 + 576*c*dphi2*off*s2*t30*t7 + 96*dphi1*dphi2*m2*off*s2*t0*t3*t30 + 96*dphi1*dphi2*m2*off*s2*t0*t30*t9 + 1152*dphi1*dphi2*m2*off*t0*t192*t209 + 1152*dphi1*dphi2*m2*off*t0*t192*t30*t39 + 2304*dphi1*dphi2*m2*t0*t13*t32*t39*t7 + 576*dphi1*dphi2*m2*t0*t2*t32*t39*t7 + 2304*dphi1*dphi2*m2*t13*t30*t32*t38*t8 + 576*dphi1*dphi2*m2*t2*t30*t32*t38*t8 - dphi1*t1018 - dphi1*t1019 - dphi1*t1021 - dphi1*t1023 - dphi1*t218 - dphi1*t220 - dphi2*t1006 - dphi2*t1013 - dphi2*t341 - dphi2*t343 - dphi2*t345 - dphi2*t347 - dphi2*t504 - dphi2*t506 - dphi2*t622*t73 + 1152*grav*m2*s2*t0*t13*t38*t7 + 288*grav*m2*s2*t0*t2*t38*t7 + 24*m1*off*s2*t0*t121*t2*t30 + 24*m1*off*s2*t0*t121*t30*t77 + 288*m1*off*s2*t0*t121*t30*t8*t87 + 288*m1*off*s2*t121*t30*t452*t87 + 12*m1*s2*t121*t38*t461*t7 - m1*t1001 - m1*t245*t559 - m1*t427 - m1*t552 - m1*t996 - m1*t997 + 1728*m2*off*s2*t0*t121*t2*t30*t8 + 48*m2*off*s2*t0*t121*t3*t30 + 48*m2*off*s2*t0*t121*t30*t9 + 48*m2*off*s2*t0*t198*t3*t30 + 48*m2*off*s2*t0*t198*t30*t9 + 1728*m2*off*s2*t121*t2*t30*t452 + 576*m2*off*t0*t121*t192*t209 + 576*m2*off*t0*t121*t192*t30*t39 + 576*m2*off*t0*t192*t198*t209 + 576*m2*off*t0*t192*t198*t30*t39 + 2304*m2*s2*t0*t121*t30*t455*t8 + 1152*m2*s2*t0*t13*t30*t7*u + 288*m2*s2*t0*t2*t30*t7*u + 288*m2*s2*t1*t121*t38*t461*t7 + 2304*m2*s2*t121*t30*t452*t455 + 288*m2*s2*t121*t38*t458*t461 + 2304*m2*t0*t121*t13*t32*t39*t7 + 576*m2*t0*t121*t2*t32*t39*t7 + 1152*m2*t0*t13*t198*t32*t39*t7 + 288*m2*t0*t198*t2*t32*t39*t7 + 2304*m2*t121*t13*t30*t32*t38*t8 + 576*m2*t121*t2*t30*t32*t38*t8 + 1152*m2*t13*t198*t30*t32*t38*t8 + 288*m2*t198*t2*t30*t32*t38*t8 - m2*t983 - m2*t984 - m2*t986 - m2*t992 - m2*t993 - 1728*off*t522*t533 - t0*t1003*t8 - t1000*t523 - t1002*t238 - t1002*t240 - t1007*t233 - t1007*t235 - t1009 - t1011 - t1014*t1029 - t1015 - t1016 - t1024*u - t1025*t752 - t1027*t268 - t1028*t1029 - t1029*t1030 - t1029*t1034 - t1029*t1037 - t1029*t1039 - t1032*t189 - t1033*t448 - t1035 - t1038 - t1041 - t110 - t112 + t113 + t114 - t116 - t118 + t119 + t120 + t140 + t147 + t152 + t156 + t163 + t165 + t172 + t175 - t198*t653 - t198*t654 - t198*t657 - t198*t660 - t198*t665 - t198*t667 - t243*t978 - t249*t279 - t249*t282 - t250*t279 - t250*t282 - t271*t998 - t271*t999 - t275*t978 - t276*t998 - t276*t999 - t289*u - t291*u - 1728*t352*t394*t72 - t385*u - t387*u - t390 - t391 - t396*t995 - t398 - t399 - t405*t63 - t455*t522*t640 - t456*t511*t640 - t494*t724 - t520*t850 - t520*t856 - t909*t973 - t96*t995 - t979*u - t980*u - t982*u - t989 - t991 - t994*u
    t1043 = 24*t5
    t1044 = 24*t11
    t1045 = 96*t13
    t1046 = t1045*t15
    t1047 = t1045*t8
    t1048 = t1047*t3
    t1049 = t1045*t19
    t1050 = t1047*t9
    t1051 = t52*t67
    t1052 = m2*t1051
    t1053 = t57*t67
    t1054 = m2*t1053
    t1055 = t53*t62
    t1056 = m2*t1055
    t1057 = t58*t62
    t1058 = m2*t1057
    t1059 = m2*t789
    t1060 = m2*t791
    t1061 = 96*L1*m2*off*t1*t3 + 96*L1*m2*off*t1*t9 + 96*L1*m2*off*t3*t8 + 96*L1*m2*off*t8*t9 + 2304*m2*t0*t13*t30*t32*t38*t7 + 576*m2*t0*t2*t30*t32*t38*t7 - m2*t1046 - m2*t1048 - m2*t1049 - m2*t1050 - t1*t1043 - t1*t1044 - t1043*t8 - t1044*t8 - t1052 - t1054 - t1056 - t1058 + t1059 - t106 + t1060 - t643*t714
    t1062 = m2*t340
    t1063 = t1062*t8
    t1064 = t1*t1062
    t1065 = t256*t280
    t1066 = t229*t272
    t1067 = m2*t217
    t1068 = 144*L1*dphi1*m2*s2*t0*t38 + 144*L1*dphi1*m2*s2*t30*t7 + 576*L1*dphi2*m2*off*t1 + 576*L1*dphi2*m2*off*t8 + 12*dphi1*m2*t3 + 144*dphi1*m2*t31*t32 + 144*dphi1*m2*t32*t39 + 12*dphi1*m2*t9 - dphi1*t1067 - dphi1*t444 + 576*dphi2*m2*off*s2*t0*t38 + 576*dphi2*m2*off*s2*t30*t7 - dphi2*t1063 - dphi2*t1064 - dphi2*t393 - dphi2*t396 - dphi2*t46 - dphi2*t49 - dphi2*t83 - dphi2*t96 - m2*t1065 - m2*t1066 - m2*t716 - m2*t717 - m2*t718 - m2*t719
    t1069 = t584*t669
    t1070 = m2*t176
    t1071 = grav*t382
    t1072 = t578*u
    t1073 = m2*t167
    t1074 = t134*t167
    t1075 = t50*u
    t1076 = m2*t47
    t1077 = t127*t64
    t1078 = t186*t818
    t1079 = t366*t641
    t1080 = t1036*t661
    t1081 = t668*t669
    t1082 = t42*t602
    t1083 = m2*t764
    t1084 = t63*t771
    t1085 = t63*t768
    t1086 = 4608*t72
    t1087 = t1086*t61*t71
    t1088 = 1152*t533
    t1089 = t1088*t639
    t1090 = m2*t824
    t1091 = t47*t644
    t1092 = t638*t905
    t1093 = t641*t905
    t1094 = t1008*t42
    t1095 = -t1014 - t1028 - t1030 - t1034 - t1037 - t1039 + t1079 + t1080 + t1091 + t1092 + t1093 + t1094
    t1096 = t298/t107**3
    t1097 = t1096*t668
    t1098 = dphi1*t201
    t1099 = t72*t880
    t1100 = t243*t880
    t1101 = dphi2*t265
    t1102 = -dphi2*t603 - dphi2*t605 + dphi2*t615 + dphi2*t617 - dphi2*t619 + dphi2*t635 + t1098*t279 + t1098*t282 - t1098*t289 - t1098*t291 - t1099*t271 - t1099*t276 + t1100*t629 + t1101*t229 - t262*t622 - t265*t621 - t604 - t606 + t616 + t618 - t620 - t623 - t625 - t626 - t627 + t628 + t631 + t632 + t633*t880 + t634 + t636 + t637
    t1103 = t650*t669
    t1104 = 24*t87
    t1105 = t1104*t8
    t1106 = t1105*t3
    t1107 = t1104*t15
    t1108 = t1105*t9
    t1109 = t1104*t19
    t1110 = 24*t32
    t1111 = t1110*t2
    t1112 = t1111*t31
    t1113 = t1111*t39
    t1114 = t1110*t77
    t1115 = t1114*t31
    t1116 = t1114*t39
    t1117 = t103*t66
    t1118 = t1117*t31
    t1119 = t1117*t39
    t1120 = t100*t66
    t1121 = t1120*t31
    t1122 = t1120*t39
    t1123 = -2*t10 - t1106 - t1107 - t1108 - t1109 - t1112 - t1113 - t1115 - t1116 - t1118 - t1119 - t1121 - t1122 - 2*t4 - 2*t78 - 2*t80
    t1124 = dphi1*t183
    t1125 = dphi1*t272
    t1126 = dphi1*t624
    t1127 = t183*t249
    t1128 = t183*t250
    t1129 = t70*t912
    t1130 = 24*t4
    t1131 = 24*t10
    t1132 = 96*L1*off*t1*t3 + 1152*L1*off*t1*t31*t32 + 96*L1*off*t1*t9 + 96*L1*off*t3*t8 + 1152*L1*off*t32*t39*t8 + 96*L1*off*t8*t9 + 2304*t0*t13*t30*t32*t38*t7 + 576*t0*t2*t30*t32*t38*t7 - t1*t1130 - t1*t1131 - t1046 - t1048 - t1049 - t1050 - t1051 - t1053 - t1055 - t1057 - t1130*t8 - t1131*t8 - t714*t912
    t1133 = -24*L1*m2*s2*t0*t3*t30 - 24*L1*m2*s2*t0*t30*t9 - 288*L1*m2*t0*t192*t209 - 288*L1*m2*t0*t192*t30*t39 - 48*m2*off*s2*t3*t38*t7 - 48*m2*off*s2*t38*t7*t9 - 576*m2*off*t192*t194*t7 - 576*m2*off*t192*t31*t38*t7 + t257 + t263 + t293 + t295 + t675 + t677 + t679 + t681
    t1134 = -t108*t1133
    t1135 = t669*t686
    t1136 = dphi1*t674
    t1137 = -24*L1*dphi1*s2*t0*t3*t30 - 24*L1*dphi1*s2*t0*t30*t9 - 288*L1*dphi1*t0*t192*t209 - 288*L1*dphi1*t0*t192*t30*t39 - 24*L1*dphi2*s2*t0*t3*t30 - 24*L1*dphi2*s2*t0*t30*t9 - 288*L1*dphi2*t0*t192*t209 - 288*L1*dphi2*t0*t192*t30*t39 - 48*dphi1*off*s2*t3*t38*t7 - 48*dphi1*off*s2*t38*t7*t9 - 576*dphi1*off*t192*t194*t7 - 576*dphi1*off*t192*t31*t38*t7 - 48*dphi2*off*s2*t3*t38*t7 - 48*dphi2*off*s2*t38*t7*t9 - 576*dphi2*off*t192*t194*t7 - 576*dphi2*off*t192*t31*t38*t7 + t1136*t3 + t1136*t9 + t472*t708 + t474 + t525 + t527 + t702 + t703 + t706*t847 + t707 + t708*t847 + t854 + t895 + t896 + t897 + t902
    t1138 = t34 + t40 + t88 + t92
    t1139 = t669*t689
    t1140 = t669*t691
    t1141 = t669*t701
    t1142 = t1096*t701
    t1143 = t669*t715
    t1144 = t299*t581
    t1145 = t184*t187
    t1146 = t181*t187
    t1147 = m1*t740
    t1148 = m2*t1147
    t1149 = m1*t813
    t1150 = t757*t842
    t1151 = t201*t64
    t1152 = t1151*t406
    t1153 = t1151*t403
    t1154 = t436*t8
    t1155 = t201*t954
    t1156 = t206*t441
    t1157 = t299*t578 + t393*t435 + t396*t435 - t40*t478 + t435*t83 + t538
    t1158 = t564*u
    t1159 = t144*u
    t1160 = t1159*t195*t394
    t1161 = t435*t748
    t1162 = t394*t438
    t1163 = t435*t752
    t1164 = grav*t958 + grav*t961 + grav*t968 + grav*t969 - 144*m2*s2*t1*t30*t87*u - 12*m2*s2*t2*t30*u - 12*m2*s2*t30*t77*u - 144*m2*s2*t30*t8*t87*u
    t1165 = 24*t184
    t1166 = t63*t725
    t1167 = 288*t0*t133*t534
    t1168 = 288*t533*t64*t730
    t1169 = t1*t759
    t1170 = t65*t730
    t1171 = t1033*t189*t394
    t1172 = t195*t440*t730
    t1173 = t205*t440
    t1174 = 144*t1173*t134
    t1175 = t1025*t438
    t1176 = 288*t1173*t166
    t1177 = t1032*t166
    t1178 = 576*t1076
    t1179 = -288*L1*grav*m2*t0*t31*t32 + grav*t385 + grav*t387 + grav*t979 + grav*t980 - 144*m1*s2*t1*t30*t87*u - 12*m1*s2*t2*t30*u - 12*m1*s2*t30*t77*u - 144*m1*s2*t30*t8*t87*u - 576*m2*off*t32*t39*t7*u + t1073*t184 + t1178*t186
    t1180 = t987*u
    t1181 = t299*t823
    t1182 = t1181*t121
    t1183 = t349*t821
    t1184 = 1152*t122
    t1185 = t1184*t299
    t1186 = 576*t122
    t1187 = t349*t47
    t1188 = t823*t828
    t1189 = 4608*t22
    t1190 = t1189*t661
    t1191 = t121*t299
    t1192 = t1086*t323
    t1193 = t349*t914
    t1194 = dphi1*t42
    t1195 = dphi2*t1194
    t1196 = dphi2*t916
    t1197 = t1189*t366
    t1198 = t841*t842
    t1199 = t122*t819
    t1200 = t299*t914
    t1201 = -t1200*t366 + t1200*t661 - t299*t913 - t860 - t862 - t866 - t869 + t900 + t901 + t906 + t907 + t941
    t1202 = t562/t326**3
    t1203 = t1202*t841
    t1204 = dphi1*t859
    t1205 = t373*t856
    t1206 = dphi1*t928
    t1207 = t122*t373
    t1208 = dphi1*t909
    t1209 = 9216*t13*t639
    t1210 = t256*t435
    t1211 = t229*t394
    t1212 = m1*t103
    t1213 = t299*t775
    t1214 = t209*t479
    t1215 = t201*t373
    t1216 = t478*t880
    t1217 = t272*t299
    t1218 = t237*t479
    t1219 = t229*t232
    t1220 = -4608*L1*dphi2*off*t0*t299*t30*t32*t38*t7 - 1152*L1*dphi2*off*t1*t299*t32*t39 - 1152*L1*dphi2*off*t299*t31*t32*t8 - 48*dphi1*off*s2*t0*t299*t3*t38 - 48*dphi1*off*s2*t0*t299*t38*t9 - 48*dphi1*off*s2*t299*t3*t30*t7 - 48*dphi1*off*s2*t299*t30*t7*t9 - 576*dphi1*off*t0*t192*t194*t299 - 576*dphi1*off*t0*t192*t299*t31*t38 - 576*dphi1*off*t192*t209*t299*t7 - 576*dphi1*off*t192*t299*t30*t39*t7 - 48*dphi2*off*s2*t0*t299*t3*t38 - 48*dphi2*off*s2*t0*t299*t38*t9 - 48*dphi2*off*s2*t299*t3*t30*t7 - 48*dphi2*off*s2*t299*t30*t7*t9 - 576*dphi2*off*t0*t192*t194*t299 - 576*dphi2*off*t0*t192*t299*t31*t38 - 576*dphi2*off*t192*t209*t299*t7 - 576*dphi2*off*t192*t299*t30*t39*t7 - 1152*dphi2*t1*t13*t299*t31*t32 - 288*dphi2*t1*t2*t299*t31*t32 + dphi2*t1199 - 1152*dphi2*t13*t299*t32*t39*t8 - 288*dphi2*t2*t299*t32*t39*t8 + dphi2*t825 + t1213*t472 + t1213*t847 + t1214*t472 + t1214*t847 + t1215*t796 + t1215*t800 + t1216*t528 + t1216*t531 + t1217*t796 + t1217*t800 + t1218*t472 + t1218*t847 + t1219*t299*t472 + t1219*t299*t847 + t778 + t780 + t787 + t788 + t799 + t802 + t816 + t817
    t1221 = m2*t0
    t1222 = t829*t842
    t1223 = -m2*t1106 - m2*t1107 - m2*t1108 - m2*t1109 - m2*t1112 - m2*t1113 - m2*t1115 - m2*t1116 - m2*t1118 - m2*t1119 - m2*t1121 - m2*t1122 - 2*t11 - 2*t5 - 2*t975 - 2*t976
    t1224 = m2*t193
    t1225 = t209*t256
    t1226 = m2*t199
    t1227 = t121*t850
    t1228 = m2*t898
    t1229 = 24*t1127
    t1230 = 24*t1128
    t1231 = m2*t256
    t1232 = t1*t7
    t1233 = dphi2*t228
    t1234 = t1004*t183
    t1235 = t1029*t641
    t1236 = t1036*t53
    t1237 = t1036*t58
    t1238 = t1125*t70
    t1239 = t1124*t280
    t1240 = 2304*t533*t639
    t1241 = m2*t1209
    t1242 = 48*t5
    t1243 = 48*t11
    t1244 = 192*t13
    t1245 = m2*t1244
    t1246 = 192*L1*m2*off*t1*t3 + 2304*L1*m2*off*t1*t31*t32 + 192*L1*m2*off*t1*t9 + 192*L1*m2*off*t3*t8 + 2304*L1*m2*off*t32*t39*t8 + 192*L1*m2*off*t8*t9 - m1*t1106 - m1*t1107 - m1*t1108 - m1*t1109 - m1*t1112 - m1*t1113 - m1*t1115 - m1*t1116 - m1*t1118 - m1*t1119 - m1*t1121 - m1*t1122 - t1*t1242 - t1*t1243 - t1087 + t1089 + t1090 - t1242*t8 - t1243*t8 - t1244*t243*t8 - t1245*t15 - t1245*t19 - t1245*t8*t9 - t53*t638 - t53*t641 - t58*t638 - t58*t641 - 2*t75 - 2*t76 - 2*t79 - 2*t81
    t1247 = m2*t272
    t1248 = t299*t844
    t1249 = t299*t850
    t1250 = t921*t923
    t1251 = t436*t452*t87
    t1252 = m1*t545
    t1253 = 1728*t205
    t1254 = m1*t394
    t1255 = t103*t436
    t1256 = t192*t299
    t1257 = t205*t299
    t1258 = t1256*t473 - t1256*t500 - t1256*t508 + t1256*t516 - t1256*t551 - t1256*t554 + t1257*t524 + t1257*t526 - t1257*t796 - t1257*t800 + t192*t480 + t192*t518 - t299*t874 - t299*t876 + t891 + t892
    t1259 = t327*(t1258 + t841)
    t1260 = t7*t893
    t1261 = t77*t893
    t1262 = dphi1*t535
    t1263 = t87*t922
    t1264 = t87*t926
    t1265 = t842*t952
    t1266 = 4608*t455
    t1267 = dphi2*t1012
    t1268 = 576*t461
    t1269 = 576*dphi2
    t1270 = t1005*t1269
    t1271 = dphi1*t885
    t1272 = t183*t225
    t1273 = 1152*t176
    t1274 = 6912*t464
    t1275 = t1*t1260
    t1276 = dphi1*t823
    t1277 = m2*t1276
    t1278 = off*t459
    t1279 = dphi2*t1014
    t1280 = dphi2*t1034
    t1281 = t622*t73
    t1282 = m2*t818
    t1283 = dphi1*t1088
    t1284 = t1101*t73
    t1285 = t1026*t268
    t1286 = t1004*t923
    t1287 = t8*t887
    t1288 = t1269*t268*t70
    t1289 = dphi2*t1028
    t1290 = dphi2*t1030
    t1291 = dphi1*t555
    t1292 = t1020*t1291
    t1293 = t1022*t1291
    t1294 = t70*t880
    t1295 = t1294*t271
    t1296 = t1294*t276
    t1297 = dphi1*t687
    t1298 = m1*t2
    t1299 = dphi1*t673
    t1300 = t288*t880
    t1301 = 96*t176
    t1302 = t1022*t176
    t1303 = t1273*t268
    t1304 = 6912*t13
    t1305 = dphi1*t1086*t71
    t1306 = dphi1*m2
    t1307 = dphi2*t1039
    t1308 = dphi2*t1037
    t1309 = dphi1*t1025
    t1310 = t1212*t880
    t1311 = t132 + t136 + t35 + t41
    t1312 = t842*t953
    t1313 = t842*t955
    t1314 = t842*t977
    t1315 = t1202*t977
    t1316 = t2*u
    t1317 = t249*t77
    t1318 = t166*t201
    t1319 = t1061*t842
    t1320 = 12*dphi2
    t1321 = dphi2*t334
    t1322 = 24*t134
    t1323 = t278*u
    t1324 = t288*u
    t1325 = dphi1*t284
    t1326 = dphi1*t1017
    t1327 = dphi1*t3
    t1328 = 96*t273
    t1329 = t1301*t280
    t1330 = dphi1*t9
    t1331 = t194*t515
    t1332 = 576*t183
    t1333 = 576*t70
    t1334 = t1232*t245
    t1335 = t1029*t821
    t1336 = t64*t821
    t1337 = t1029*t914
    t1338 = t121*t914
    t1339 = t121*t821
    t1340 = dphi2*t340
    t1341 = dphi2*t44
    alpha = np.array([t108*t298, t327*t562])
    d1 = np.array([[t108*t584, t108*t650 + t668*t670, t108*t686, t108*t689, t108*t691, t108*t693 + t670*t701, t108*t713 + t670*t715, t108*t721], [t327*t757, t327*t829 + t841*t843, t327*t952, t327*t953, t327*t955, t327*t974 + t843*t977, t1042*t327 + t1061*t843, t1068*t327]])
    d2 = np.zeros((2, 8, 8))
    d2[0, 0, 0] = t108*t191
    d2[0, 0, 1] = d2[0, 1, 0] = t1069*t668 + t108*(288*grav*m2*off*t31*t32*t7 + 288*m2*off*t0*t32*t39*u - t1041 - t134*t35 + t159 + t161 - t169 - t180 - t41*t581)
    d2[0, 0, 4] = d2[0, 4, 0] = t108*(t1070*t187 - t125*t71 + t183*t41 - t244 - t247 + t251 + t252 + t566 + t569 + t574 + t576 - t579)
    d2[0, 0, 5] = d2[0, 5, 0] = t1069*t701 + t108*(-grav*t145 - grav*t154 - grav*t170 - grav*t173 + 12*s1*t3*t7*u + 144*s1*t31*t32*t7*u + 144*s1*t32*t39*t7*u + 12*s1*t7*t9*u)
    d2[0, 0, 6] = d2[0, 6, 0] = t1069*t715 + t108*(144*L1*grav*t30*t32*t38*t7 + 12*L1*t3*t7*u + 144*L1*t32*t39*t7*u + 12*L1*t7*t9*u + 24*grav*off*t0*t3 + 288*grav*off*t0*t31*t32 + 24*grav*off*t0*t9 - grav*t376 - grav*t378 + 288*off*t0*t30*t32*t38*u - t1071 - t1072 - t246*u - t496*u - t582 - t583)
    d2[0, 1, 1] = t108*(m2*t1074 + m2*t1078 + m2*t189*t818 + t1008*t124 - t1008*t181 - t1008*t184 - t1009 - t1011 - t1015 - t1016 - t1035 - t1038 - t1073*t581 + t1075*t648 + t1076*t432 + t1077*t638 + t1077*t641 + t1079*t121 + t1080*t121 + t130*t644 - t134*t602 + t297 + t602*t70*u - t989 - t991) + 2*t1081*t650 + t1095*t1097 + t670*(1152*L1*m2*off*t1*t32*t39 + 1152*L1*m2*off*t31*t32*t8 + t1052 + t1054 + t1056 + t1058 - t1059 - t1060 - t1082 - t1083 - t1084 - t1085 + t1087 - t1089 - t1090)
    d2[0, 1, 2] = d2[0, 2, 1] = t108*(-dphi1*t1052 - dphi1*t1054 - dphi1*t1056 - dphi1*t1058 + dphi1*t1059 + dphi1*t1060 + dphi1*t1082 + dphi1*t1083 + dphi1*t1084 + dphi1*t1085 - dphi1*t1087 + dphi1*t1089 + dphi1*t1090 - dphi1*t659*t768 - dphi1*t659*t771 + t1102) + t1081*t686
    d2[0, 1, 3] = d2[0, 3, 1] = t108*(t1102 - t585 - t593 + t594 + t601) + t1081*t689
    d2[0, 1, 4] = d2[0, 4, 1] = t108*(144*L1*m2*t32*t39*t7 + 576*m2*off*t0*t30*t32*t38 + 288*m2*off*t31*t32*t7 - t183*t35 - t187*t71 - t579) + t1081*t691
    d2[0, 1, 5] = d2[0, 5, 1] = t1081*t693 + t1097*t1123 + t1103*t701
    d2[0, 1, 6] = d2[0, 6, 1] = t108*(grav*t178 + t1*t710 - t1071 - t1072 + t1124*t798 + t1124*t801 - t1125*t524 - t1125*t526 + t1125*t796 + t1125*t800 - t1126*t547 - t1126*t549 + t1127*t88 + t1127*t92 + t1128*t88 + t1128*t92 - t1129*t128 + t121*t310 + t121*t312 - t121*t318 - t121*t319 - t121*t321 - t121*t322 + t121*t822 + t123*t815 + t124*t34 - t131*t777 - t131*t808 - t149*t245 - t149*t248 - t157*t245 - t157*t248 - t184*t34 - t194*t262*t515 + t245*t376 + t245*t378 - t246*t249 - t246*t250 + t248*t376 + t248*t378 - t249*t496 - t250*t496 + t256*t777 + t256*t808 - t262*t809 + t31*t712 + t352*t40 - t586 - t588 - t590 - t591 - t592 + t596 + t598 + t599 + t600 - t607 - t608 - t609 - t610 + t611 + t612 + t613 + t614 - t645 - t646 + t647 - t711*t768 - t711*t771 + t754 + t758 + t763 + t776 + t786 + t810) + t1081*t713 + t1097*t1132 + t1103*t715 + t670*(-t353 - t357 - t359 - t361 - t370 - t372 + t655 + t663 + t830 + t834 + t836 + t839)
    d2[0, 1, 7] = d2[0, 7, 1] = t108*(-t195*t272 - t202*t280 + t206*t272 + t216*t280) + t1081*t721
    d2[0, 2, 2] = t108*(-t1133 - t668)
    d2[0, 2, 3] = d2[0, 3, 2] = t1134
    d2[0, 2, 5] = d2[0, 5, 2] = t1135*t701
    d2[0, 2, 6] = d2[0, 6, 2] = t108*(1152*L1*dphi1*off*t0*t32*t39*t7 + 1152*L1*dphi1*off*t30*t32*t38*t8 + 1152*dphi1*t0*t13*t31*t32*t7 + 288*dphi1*t0*t2*t31*t32*t7 + 1152*dphi1*t1*t13*t30*t32*t38 + 288*dphi1*t1*t2*t30*t32*t38 - dphi1*t655 - dphi1*t663 - dphi1*t830 - dphi1*t834 - dphi1*t836 - dphi1*t839 - t1137) + t1135*t715
    d2[0, 2, 7] = d2[0, 7, 2] = -t108*t1138
    d2[0, 3, 3] = t1134
    d2[0, 3, 5] = d2[0, 5, 3] = t1139*t701
    d2[0, 3, 6] = d2[0, 6, 3] = -t108*t1137 + t1139*t715
    d2[0, 3, 7] = d2[0, 7, 3] = t108*(t1138 + t203 + t207 - t217 - t219)
    d2[0, 4, 5] = d2[0, 5, 4] = t108*(-t145 - t154 - t170 - t173) + t1140*t701
    d2[0, 4, 6] = d2[0, 6, 4] = t108*(144*L1*t30*t32*t38*t7 + 24*off*t0*t3 + 288*off*t0*t31*t32 + 24*off*t0*t9 - t376 - t378 - t382 - t690) + t1140*t715
    d2[0, 5, 5] = t1123*t1142 + 2*t1141*t693
    d2[0, 5, 6] = d2[0, 6, 5] = t1132*t1142 + t1141*t713 + t1143*t693
    d2[0, 5, 7] = d2[0, 7, 5] = t1141*t721
    d2[0, 6, 6] = t1096*t1132*t715 + 2*t1143*t713
    d2[0, 6, 7] = d2[0, 7, 6] = t1143*t721
    d2[1, 0, 0] = t327*t451
    d2[1, 0, 1] = d2[1, 1, 0] = t1150*t841 + t327*(-t1*t409*t730 + t1144*t40 + t1145*t299 + t1146*t299 - t1148*t405 - t1148*t408 + t1149*t405 + t1149*t408 + t134*t299*t34 - t166*t766 - t167*t514*u - t186*t865 - t189*t865 + t401 + t403*t421 + t406*t421 - t409*t421 + t412 + t415 + t416 + t417 - t431 - t434 + t439 + t443 - t447 - t449 + t730*t760 + t730*t767)
    d2[1, 0, 4] = d2[1, 4, 0] = t327*(-t1152 - t1153 - t1154*t740 + t1154*t812 + t1155 - t1156 + t1157 + t125*t323 - t299*t733 + t403*t734 + t406*t734 - t489 - t490 + t497 + t498 - t722 - t723 - t728 - t729 - t735 + t746)
    d2[1, 0, 5] = d2[1, 5, 0] = t1150*t977 + t327*(144*L1*grav*m2*s1*s2*t1*t38 + 12*grav*m2*s1*t0*t3 + 144*grav*m2*s1*t0*t31*t32 + 144*grav*m2*s1*t0*t32*t39 + 12*grav*m2*s1*t0*t9 + 288*m2*off*s1*s2*t30*t8*u - t1158*t132 - t1158*t136 - t1158*t35 - t1158*t41 + t1160 + t1161 - t1162 - t1163 - t1164 - t741 - t744)
    d2[1, 0, 6] = d2[1, 6, 0] = t1061*t1150 + t327*(144*L1*grav*m1*s1*s2*t1*t38 + 1152*L1*grav*m2*off*s2*t38*t8 + 24*L1*grav*m2*t0*t3 + 24*L1*grav*m2*t0*t9 - grav*t289 - grav*t291 - grav*t982 - grav*t994 + 288*m1*off*s1*s2*t30*t8*u - m1*t1169*t812 - m1*t740*t784 + 48*m2*off*t3*t7*u + 48*m2*off*t7*t9*u + 1152*m2*s2*t1*t13*t30*u + 288*m2*s2*t1*t2*t30*u - t1*t369*t738 - t1165*t243 - t1165*t275 + t1166 + t1167 - t1168 - t1170 + t1171 + t1172 + t1174 - t1175 - t1176 - t1177 - t1179 + t563 - t567 + t568 - t570 + t572 + t573 - t575 - t577 - t649)
    d2[1, 1, 1] = 2*t1198*t829 + t1201*t1203 + t327*(t1010*t1181 + t1029*t1184*t867 - t1029*t1192*t47 - t1074*t299 - t1075*t262*t299 - t1077*t1181 - t1078*t299 + t1086*t365*t828 - t1129*t1187 + t1144*t167 + t1180*t299 - t1182*t366 + t1182*t661 - t1183*t366 + t1183*t661 + t1183*t861 - t1183*t905 - t1184*t50*t828 - t1185*t127 + t1185*t130 + t1186*t1187 - t1188*t366 + t1188*t661 + t1188*t861 - t1188*t905 - t1190*t1191 - t1190*t828 + t1191*t1197 + t1192*t127 - t1192*t130 + t1193*t366 - t1193*t661 - t1195*t819 + t1196*t819 + t1197*t828 - t122*t349*t898 - t124*t819 + t134*t766 + t181*t865 + t184*t865 - t189*t819 + t299*t990 - t349*t42*t815 + t349*t913 + t350*t815 + t352*t819 + t400 - t432*t867 + t450 + t561 - t581*t766) + t843*(4608*L1*off*t0*t299*t30*t32*t38*t7 + 1152*L1*off*t1*t299*t32*t39 + 1152*L1*off*t299*t31*t32*t8 + 1152*t1*t13*t299*t31*t32 + 288*t1*t2*t299*t31*t32 - t1199 + 1152*t13*t299*t32*t39*t8 + 288*t2*t299*t32*t39*t8 - t765 - t770 - t772 - t779 - t790 - t792 - t825)
    d2[1, 1, 2] = d2[1, 2, 1] = t1198*t952 + t327*(144*L1*c*m2*s2*t38*t7 + 9216*L1*dphi1*off*t0*t299*t30*t32*t38*t7 + 2304*L1*dphi1*off*t1*t299*t32*t39 + 2304*L1*dphi1*off*t299*t31*t32*t8 + 288*c*m2*off*s2*t0*t30 + 48*dphi1*m1*m2*off*s2*t0*t2*t38 + 48*dphi1*m1*m2*off*s2*t0*t38*t77 + 576*dphi1*m1*m2*off*s2*t0*t38*t8*t87 + 576*dphi1*m1*m2*off*s2*t1*t30*t7*t87 + 48*dphi1*m1*m2*off*s2*t2*t30*t7 + 576*dphi1*m1*m2*off*s2*t30*t458*t87 + 48*dphi1*m1*m2*off*s2*t30*t7*t77 + 576*dphi1*m1*m2*off*s2*t38*t452*t87 - dphi1*m1*t100*t1210 + 1728*dphi1*off*s2*t0*t2*t299*t38*t8 + 1728*dphi1*off*s2*t1*t2*t299*t30*t7 + 1728*dphi1*off*s2*t2*t299*t30*t458 + 1728*dphi1*off*s2*t2*t299*t38*t452 + 2304*dphi1*s2*t0*t299*t38*t455*t8 + 2304*dphi1*s2*t1*t299*t30*t455*t7 + 2304*dphi1*s2*t299*t30*t455*t458 + 2304*dphi1*s2*t299*t38*t452*t455 + 2304*dphi1*t1*t13*t299*t31*t32 + 576*dphi1*t1*t2*t299*t31*t32 - dphi1*t1211*t1212 + 2304*dphi1*t13*t299*t32*t39*t8 + 576*dphi1*t2*t299*t32*t39*t8 - dphi1*t629*t934 - t0*t885*t893 - t1194*t868 - t1204*t768 - t1204*t771 - t1205*t761 - t1205*t762 - t1206*t805 - 2304*t1207*t61 - t1208*t323*t402 - t1208*t820 - t1209*t373 - t1220 - t278*t933 - t373*t53*t914 - t373*t58*t914 - t458*t886*t928 - t7*t734*t872 - t761*t872 - t762*t872 - t773 - t774*t872 - t781 - t886*t894 - t899*t916)
    d2[1, 1, 3] = d2[1, 3, 1] = t1198*t953 + t327*(288*L1*c*m2*s2*t0*t30 + 4608*L1*dphi1*off*t0*t299*t30*t32*t38*t7 + 1152*L1*dphi1*off*t1*t299*t32*t39 + 1152*L1*dphi1*off*t299*t31*t32*t8 + 576*c*m2*off*s2*t38*t7 + 1152*dphi1*t1*t13*t299*t31*t32 + 288*dphi1*t1*t2*t299*t31*t32 + 1152*dphi1*t13*t299*t32*t39*t8 + 288*dphi1*t2*t299*t32*t39*t8 - dphi1*t765 - dphi1*t770 - dphi1*t772 - dphi1*t779 - dphi1*t790 - dphi1*t792 - t1207*t818 - t1220 - t373*t824 - t782 - t783)
    d2[1, 1, 4] = d2[1, 4, 1] = t1198*t955 + t327*(t1152 + t1153 - t1155 + t1156 + t1157 + t187*t323 - t299*t785 + t34*t478 + t403*t467 + t406*t467 - t409*t467 + t436*t743 - t436*t803 - t72*t766 - t746)
    d2[1, 1, 5] = d2[1, 5, 1] = t1198*t974 + t1203*t1223 + t1222*t977 + t327*(144*L1*grav*m2*s1*s2*t38*t8 + 288*m2*off*s1*s2*t1*t30*u + 24*m2*off*s2*t0*t121*t2*t38 + 24*m2*off*s2*t0*t121*t38*t77 + 288*m2*off*s2*t0*t121*t38*t8*t87 + 288*m2*off*s2*t1*t121*t30*t7*t87 + 24*m2*off*s2*t121*t2*t30*t7 + 288*m2*off*s2*t121*t30*t458*t87 + 24*m2*off*s2*t121*t30*t7*t77 + 288*m2*off*s2*t121*t38*t452*t87 - t1160 - t1161 + t1162 + t1163 - t1164 - t1221*t462*t957 - 12*t535*t537 - t539*t961 - t539*t968 - t7*t963 - t804 - t806*t971 - t807*t971 - t814 - t826*t965)
    d2[1, 1, 6] = d2[1, 6, 1] = t1042*t1198 + t1061*t1222 + t1095*t843 + t1203*t1246 + t327*(144*L1*c*dphi1*s2*t38*t7 + 288*L1*c*dphi2*s2*t0*t30 + 9216*L1*dphi1*dphi2*m2*off*t0*t30*t32*t38*t7 + 2304*L1*dphi1*dphi2*m2*off*t1*t32*t39 + 2304*L1*dphi1*dphi2*m2*off*t31*t32*t8 + 144*L1*grav*m1*s1*s2*t38*t8 + 1152*L1*grav*m2*off*s2*t1*t38 + 9216*L1*m2*off*t0*t121*t30*t32*t38*t7 + 4608*L1*m2*off*t0*t198*t30*t32*t38*t7 + 2304*L1*m2*off*t1*t121*t32*t39 + 1152*L1*m2*off*t1*t198*t32*t39 + 2304*L1*m2*off*t121*t31*t32*t8 + 1152*L1*m2*off*t198*t31*t32*t8 + 576*L1*m2*t0*t30*t32*t38*u + 288*L1*m2*t31*t32*t7*u + 288*c*dphi1*off*s2*t0*t30 + 576*c*dphi2*off*s2*t38*t7 + 96*dphi1*dphi2*m2*off*s2*t0*t3*t38 + 96*dphi1*dphi2*m2*off*s2*t0*t38*t9 + 96*dphi1*dphi2*m2*off*s2*t3*t30*t7 + 96*dphi1*dphi2*m2*off*s2*t30*t7*t9 + 1152*dphi1*dphi2*m2*off*t0*t192*t194 + 1152*dphi1*dphi2*m2*off*t0*t192*t31*t38 + 1152*dphi1*dphi2*m2*off*t192*t209*t7 + 1152*dphi1*dphi2*m2*off*t192*t30*t39*t7 + 2304*dphi1*dphi2*m2*t1*t13*t31*t32 + 576*dphi1*dphi2*m2*t1*t2*t31*t32 + 2304*dphi1*dphi2*m2*t13*t32*t39*t8 + 576*dphi1*dphi2*m2*t2*t32*t39*t8 - dphi1*t585 - dphi1*t593 - dphi2*t1234*t268 - dphi2*t256*t476 + 576*grav*m2*off*t0*t32*t39 + 1152*grav*m2*off*t30*t32*t38*t7 + 288*m1*off*s1*s2*t1*t30*u + 24*m1*off*s2*t0*t121*t2*t38 + 24*m1*off*s2*t0*t121*t38*t77 + 288*m1*off*s2*t0*t121*t38*t8*t87 + 288*m1*off*s2*t1*t121*t30*t7*t87 + 24*m1*off*s2*t121*t2*t30*t7 + 288*m1*off*s2*t121*t30*t458*t87 + 24*m1*off*s2*t121*t30*t7*t77 + 288*m1*off*s2*t121*t38*t452*t87 - m1*t811*t812 + 1728*m2*off*s2*t0*t121*t2*t38*t8 + 48*m2*off*s2*t0*t121*t3*t38 + 48*m2*off*s2*t0*t121*t38*t9 + 48*m2*off*s2*t0*t198*t3*t38 + 48*m2*off*s2*t0*t198*t38*t9 + 1728*m2*off*s2*t1*t121*t2*t30*t7 + 1728*m2*off*s2*t121*t2*t30*t458 + 1728*m2*off*s2*t121*t2*t38*t452 + 48*m2*off*s2*t121*t3*t30*t7 + 48*m2*off*s2*t121*t30*t7*t9 + 48*m2*off*s2*t198*t3*t30*t7 + 48*m2*off*s2*t198*t30*t7*t9 + 576*m2*off*t0*t121*t192*t194 + 576*m2*off*t0*t121*t192*t31*t38 + 576*m2*off*t0*t192*t194*t198 + 576*m2*off*t0*t192*t198*t31*t38 + 576*m2*off*t121*t192*t209*t7 + 576*m2*off*t121*t192*t30*t39*t7 + 576*m2*off*t192*t198*t209*t7 + 576*m2*off*t192*t198*t30*t39*t7 + 2304*m2*s2*t0*t121*t38*t455*t8 + 2304*m2*s2*t1*t121*t30*t455*t7 + 2304*m2*s2*t121*t30*t455*t458 + 2304*m2*s2*t121*t38*t452*t455 + 1152*m2*s2*t13*t30*t8*u + 288*m2*s2*t2*t30*t8*u + 2304*m2*t1*t121*t13*t31*t32 + 576*m2*t1*t121*t2*t31*t32 + 1152*m2*t1*t13*t198*t31*t32 + 288*m2*t1*t198*t2*t31*t32 + 2304*m2*t121*t13*t32*t39*t8 + 576*m2*t121*t2*t32*t39*t8 + 1152*m2*t13*t198*t32*t39*t8 + 288*m2*t198*t2*t32*t39*t8 - t1002*t233 - t1002*t235 - t1003*t1232 - t1008*t134 - t1026*t1101 - t1027*t225 - t1029*t1236 - t1029*t1237 - t1029*t1240 - t1029*t1241 - t1059*t198 - t1060*t198 - t1070*t818*u - t1073*t181 - t1082*t198 - t1083*t198 - t1084*t198 - t1085*t198 - t1089*t198 - t1090*t198 - t1127*t393 - t1127*t96 - t1147*t734*u - t1166 - t1167 + t1168 - t1169*t63 + t1170 - t1171 - t1172 - t1174 + t1175 + t1176 + t1177 - t1178*t1195 - t1178*t124 - t1178*t189 - t1179 - t1196*t1228 - t121*t1236 - t121*t1237 - t121*t1240 - t121*t1241 - t121*t402*t71*t909 - t1221*t1227*t402 - t1224*t1225 - t1224*t775 - t1225*t1226 - t1226*t775 - t1227*t805 - t1228*t352 - t1229*t243 - t1229*t275 - t1230*t243 - t1230*t275 - t1231*t238 - t1231*t240 - t1233*t1234 - t1235*t768 - t1235*t771 - t1238*t271 - t1238*t276 - t1239*t271 - t1239*t276 - t205*t491 - t245*t279 - t245*t282 - t248*t279 - t248*t282 - t369*t739 - t387*t539 - t413*t494 - t477*t621 - t523*t794 - t523*t795 - t539*t980 - t642*t768 - t642*t771 - t742*t985 - t806*t856 - t807*t850 - t807*t856 - t826*t942)
    d2[1, 1, 7] = d2[1, 7, 1] = t1068*t1198 + t327*(t1002*t280 + t1247*t131 - t1247*t256 - t195*t893 - t202*t886 + t206*t893 + t216*t886 - t280*t648)
    d2[1, 2, 2] = t327*(t1201 + t1248*t468 - t1248*t511 - t1249*t468 + t1249*t511 - t1250*t924 + t1250*t927 + t1251*t924 - t1251*t927 + t1252*t629 - t1252*t931 + t1253*t939 - t1254*t944 + t1254*t948 - t1255*t229 + t1255*t262 + t1258 - t36*t918 + t394*t894 - t495*t885 - t845 - t851 + t853 + t855 - t857 - t863 + t904 + t908 - t911 - t930 - t935 + t937 + t938 + t943)
    d2[1, 2, 3] = d2[1, 3, 2] = t1259
    d2[1, 2, 5] = d2[1, 5, 2] = t1265*t977 + t327*(-dphi1*t929 + dphi1*t936 + t1260*t884 + t1261*t629 - t1261*t931 - t1262*t278 + t1262*t288 - t1263*t924 + t1263*t927 + t1264*t924 - t1264*t927 - t884*t887 - t945 - t947 + t949 + t950)
    d2[1, 2, 6] = d2[1, 6, 2] = t1061*t1265 + t327*(3456*dphi1*off*t452*t534 + dphi1*t1273*t228 - 3456*dphi1*t1278*t533 + dphi1*t1303 + dphi2*t1079 + dphi2*t1080 + dphi2*t1091 + dphi2*t1092 + dphi2*t1093 + dphi2*t1094 + dphi2*t1303 + off*t1286*t453 + t1*t1304*t183*t893 + t1004*t1272 - t1006 - t1013 - t1018 - t1019 - t1021 - t1023 - t1076*t1276*t64 + t1100*t1301 + t1136*t932 + t1190*t1306 + t1194*t1282 + 3456*t1194*t176*t435 - t1197*t1306 - t1206*t453 + t1206*t459 + t1233*t1273 + t1234*t265 - t1266*t1275 + t1266*t1287 - t1266*t922 + t1266*t926 - t1267 + t1268*t1275 - t1268*t1287 + t1268*t922 - t1268*t926 + t1269*t1272 + t1269*t183*t265 - t1270 + t1271*t510 - t1271*t724 + t1274*t922 - t1274*t926 + t1277*t366 - t1277*t661 + t1277*t905 - t1278*t1286 - t1279 - t1280 - t1281 - t1282*t916 - t1283*t861 + t1283*t905 - t1284 - t1285 - t1288 - t1289 - t1290 - t1292 - t1293 - t1295 - t1296 - t1297*t1298 - t1297*t932 + t1298*t1300 + t1299*t271 + t1299*t276 + t1300*t932 + t1301*t630 + t1302*t280 + t1302*t880 - t1304*t886*t972 + t1305*t47 - t1305*t50 - t1307 - t1308 - t1309*t944 + t1309*t948 - t1310*t229 + t1310*t262 + t271*t284 + t276*t284 - 3456*t394*t72*t916 + t688 - t881*t932)
    d2[1, 2, 7] = d2[1, 7, 2] = t327*(m2*t203 + m2*t207 - t1067 + t1311 - t444)
    d2[1, 3, 3] = t1259
    d2[1, 3, 5] = d2[1, 5, 3] = t1312*t977 + t327*(-t329 - t331 - t335 - t338)
    d2[1, 3, 6] = d2[1, 6, 3] = t1061*t1312 + t327*(576*L1*c*off*t1 + 576*L1*c*off*t8 + 2304*L1*dphi1*m2*off*t0*t31*t32*t7 + 2304*L1*dphi1*m2*off*t1*t30*t32*t38 + 48*L1*dphi1*m2*s2*t3*t38*t7 + 48*L1*dphi1*m2*s2*t38*t7*t9 + 576*L1*dphi1*m2*t192*t194*t7 + 576*L1*dphi1*m2*t192*t31*t38*t7 + 2304*L1*dphi2*m2*off*t0*t31*t32*t7 + 2304*L1*dphi2*m2*off*t1*t30*t32*t38 + 48*L1*dphi2*m2*s2*t3*t38*t7 + 48*L1*dphi2*m2*s2*t38*t7*t9 + 576*L1*dphi2*m2*t192*t194*t7 + 576*L1*dphi2*m2*t192*t31*t38*t7 + 576*c*off*s2*t0*t38 + 576*c*off*s2*t30*t7 + 96*dphi1*m2*off*s2*t0*t3*t30 + 96*dphi1*m2*off*s2*t0*t30*t9 + 1152*dphi1*m2*off*t0*t192*t209 + 1152*dphi1*m2*off*t0*t192*t30*t39 + 2304*dphi1*m2*t0*t13*t32*t39*t7 + 576*dphi1*m2*t0*t2*t32*t39*t7 + 2304*dphi1*m2*t13*t30*t32*t38*t8 + 576*dphi1*m2*t2*t30*t32*t38*t8 - dphi1*t1014 - dphi1*t1028 - dphi1*t1030 - dphi1*t1034 - dphi1*t1037 - dphi1*t1039 + 96*dphi2*m2*off*s2*t0*t3*t30 + 96*dphi2*m2*off*s2*t0*t30*t9 + 1152*dphi2*m2*off*t0*t192*t209 + 1152*dphi2*m2*off*t0*t192*t30*t39 + 2304*dphi2*m2*t0*t13*t32*t39*t7 + 576*dphi2*m2*t0*t2*t32*t39*t7 + 2304*dphi2*m2*t13*t30*t32*t38*t8 + 576*dphi2*m2*t2*t30*t32*t38*t8 - t1006 - t1013 - t1018 - t1019 - t1021 - t1023 - t1267 - t1270 - t1279 - t1280 - t1281 - t1284 - t1285 - t1288 - t1289 - t1290 - t1292 - t1293 - t1295 - t1296 - t1307 - t1308 - t341 - t343 - t345 - t347 - t504 - t506 - t685)
    d2[1, 3, 7] = d2[1, 7, 3] = t327*(576*L1*m2*off*t1 + 576*L1*m2*off*t8 + 576*m2*off*s2*t0*t38 + 576*m2*off*s2*t30*t7 - t1063 - t1064 - t1210 - t1211 - t1311 - t393 - t396 - t46 - t49 - t83 - t96)
    d2[1, 4, 5] = d2[1, 5, 4] = t1313*t977 + t327*(144*L1*m2*s1*s2*t0*t30*t7 + 144*L1*m2*s1*s2*t1*t38 + 12*m2*s1*t0*t3 + 144*m2*s1*t0*t31*t32 + 144*m2*s1*t0*t32*t39 + 12*m2*s1*t0*t9 - t425 - t445 - t958 - t961 - t968 - t969)
    d2[1, 4, 6] = d2[1, 6, 4] = t1061*t1313 + t327*(144*L1*m1*s1*s2*t0*t30*t7 + 144*L1*m1*s1*s2*t1*t38 + 1152*L1*m2*off*s2*t38*t8 + 24*L1*m2*t0*t3 + 288*L1*m2*t0*t31*t32 + 24*L1*m2*t0*t9 + 576*m2*off*t30*t32*t38*t7 + 1152*m2*s2*t0*t13*t30*t7 + 288*m2*s2*t0*t2*t30*t7 - t1024 - t1025*t743 - t1031*t73 - t1040*t183 + t146 + t155 + t171 + t174 - t289 - t291 - t385 - t387 - t979 - t980 - t982 - t988 - t994)
    d2[1, 5, 5] = t1223*t1315 + 2*t1314*t974
    d2[1, 5, 6] = d2[1, 6, 5] = t1042*t1314 + t1246*t1315 + t1319*t974 + t327*(t1000*t521 - t1000*t971 - t1001 - t1159*t219 - t1316*t957 + t1317*t148 - t1317*t970 - t1318*t751 + t134*t144*t484 + t148*t2*t249 - t2*t956 + t205*t438 - t245*t559 + t249*t558 - t334*t467*t539 + t423 - t427 + t485*t957 + t522*t971 + t537*t960 - t552 + t692 + t704*t965 - t724*t962 + t730*t803 - t730*t965 - t959 - t960*u - t964 - t966 - t967*u - t996 - t997) + t701*t843
    d2[1, 5, 7] = d2[1, 7, 5] = t1068*t1314 + t327*(-t1*t1321 - t1320*t2 - t1320*t77 - t1321*t8)
    d2[1, 6, 6] = 2*t1042*t1319 + t1061*t1202*t1246 + t1132*t843 + t327*(t1000*t844 - t1000*t850 - t1000*t856 + t1000*t903 - t1004*t47*t827 + t1029*t122*t898 + t1029*t70*t940 - t1029*t913 - t1033*t1318 - t1033*t429 + t1074 - t1129*t127 + t1129*t130 - t1145 - t1146 - t1180 + t1186*t127 - t1186*t130 + t1195*t815 - t1196*t815 + t121*t468*t844 - t1227*t468 + t124*t1253*t176 + t124*t815 + t127*t1336 + t1273*t777 + t1273*t808 - t130*t1336 - t131*t233 - t131*t235 + 288*t1316*t205*t64 + t1322*t3 + t1322*t9 + t1323*t3 + t1323*t9 - t1324*t3 - t1324*t9 + t1325*t547 + t1325*t549 - t1326*t547 - t1326*t549 - t1327*t1328 + t1327*t1329 - t1328*t1330 + t1329*t1330 + t1331*t1332 - t1331*t73 + t1332*t809 - t1333*t777 - t1333*t808 - t1334*t844 + t1334*t850 + t1335*t366 - t1335*t661 - t1335*t861 + t1335*t905 - t1337*t366 + t1337*t661 - t1338*t366 + t1338*t661 + t1339*t366 - t1339*t661 - t166*t547 + t177*t581 + t186*t815 + t189*t815 + t193*t473 + t193*t706 - t198*t353 - t198*t357 - t198*t359 - t198*t361 - t198*t370 - t198*t372 + t198*t655 + t198*t663 + t198*t830 + t198*t834 + t198*t836 + t198*t839 + t199*t473 + t199*t706 + 288*t2*t414 - t229*t238 - t229*t240 + t233*t256 + t235*t256 + t238*t262 + t240*t262 + t249*t524 + t249*t526 - t249*t796 - t249*t800 + t250*t524 + t250*t526 - t250*t796 - t250*t800 + t325*t410 - t352*t815 - t352*t917 - t356*t389 + t369*t405 + t369*t408 - t408*t62 + t414*t62 - t522*t844 + t522*t850 + t522*t856 - t522*t903 + t528*t704 + t528*t705 + t531*t704 + t531*t705 - t539*t910 - t547*t998 - t547*t999 - t549*t998 - t549*t999 + t704*t942 - t73*t809 - t730*t981 - t9*t978 - t983 - t984 - t986 - t990 - t992 - t993)
    d2[1, 6, 7] = d2[1, 7, 6] = t1068*t1319 + t327*(144*L1*dphi1*s2*t0*t38 + 144*L1*dphi1*s2*t30*t7 + 576*L1*dphi2*off*t1 + 576*L1*dphi2*off*t8 - dphi1*t217 - dphi1*t219 + 576*dphi2*off*s2*t0*t38 + 576*dphi2*off*s2*t30*t7 - t1*t1340 - t1*t1341 - t1065 - t1066 - t1340*t8 - t1341*t8 - t720)
    return alpha, d1, d2


def cart_energy(phi1, phi2, dphi1, dphi2, dxc, m1, m2, geom):
    L1, L2, w1, w2, off, s1, s2, grav = geom
    t0 = (1/2)*dxc**2
    t1 = dphi1*dxc
    t2 = math.cos(phi1)
    t3 = L1*m2
    t4 = t2*t3
    t5 = m1*s1
    t6 = t1*t2
    t7 = L2**2
    t8 = dphi1*dphi2
    t9 = m2*t8
    t10 = (1/12)*t9
    t11 = w2**2
    t12 = 2*m2
    t13 = off*t12
    t14 = L1**2
    t15 = dphi1**2
    t16 = (1/24)*t15
    t17 = m1*t16
    t18 = m2*t16
    t19 = dphi2**2*m2
    t20 = (1/24)*t19
    t21 = phi1 + phi2
    t22 = math.cos(t21)
    t23 = s2*t22
    t24 = m2*t23
    t25 = math.sin(phi1)
    t26 = t25**2
    t27 = t15*t26
    t28 = 2*off
    t29 = t28*t3
    t30 = t2**2
    t31 = t15*t30
    t32 = math.sin(t21)
    t33 = s2*t25*t32
    t34 = t33*t8
    t35 = t23*t4
    t36 = (1/2)*t15
    t37 = t26*t36
    t38 = m2*t14
    t39 = t30*t36
    t40 = m1*s1**2
    t41 = off**2*t12
    t42 = s2**2
    t43 = t32**2*t42
    t44 = t22**2*t42
    t45 = t15*t33
    t46 = t2*t24*t28
    t47 = m2*t36
    t48 = (1/2)*t19
    t49 = grav*t2
    return dphi2*dxc*t24 + m1*t0 + m2*t0 + t1*t24 + t1*t4 + t10*t11 + t10*t7 + t11*t18 + t11*t20 - t13*t34 - t13*t45 - t13*t6 + t14*t17 + t15*t35 - t15*t46 + t17*w1**2 + t18*t7 + t20*t7 - t27*t29 + t27*t41 - t29*t31 + t3*t34 + t3*t45 + t31*t41 + t35*t8 + t37*t38 + t37*t40 + t38*t39 + t39*t40 + t43*t47 + t43*t48 + t43*t9 + t44*t47 + t44*t48 + t44*t9 - t46*t8 + t5*t6, 2*grav*m2*off*t2 - grav*t24 - t3*t49 - t49*t5
