1-t+q*t+q^2*t+q^3*t+q^4*t+q^5*t-q*t^2+q^4*t^2+2*q^5*t^2+4*q^6*t^2 +q^7*t^2+q^8*t^2-q^2*t^3-q^4*t^3-q^5*t^3+5*q^7*t^3+4*q^8*t^3 +4*q^9*t^3-q^3*t^4-q^5*t^4-2*q^6*t^4-2*q^7*t^4+3*q^8*t^4 +5*q^9*t^4+7*q^(10)*t^4+q^(11)*t^4-q^4*t^5-q^6*t^5-2*q^7*t^5 -4*q^8*t^5+q^9*t^5+5*q^(10)*t^5+8*q^(11)*t^5+2*q^(12)*t^5-q^5*t^6 -q^7*t^6-2*q^8*t^6-5*q^9*t^6+5*q^(11)*t^6+8*q^(12)*t^6+q^(13)*t^6 -q^6*t^7-q^8*t^7-2*q^9*t^7-6*q^(10)*t^7+5*q^(12)*t^7+7*q^(13)*t^7 -q^7*t^8-q^9*t^8-2*q^(10)*t^8-5*q^(11)*t^8+q^(12)*t^8 +5*q^(13)*t^8+4*q^(14)*t^8-q^8*t^9-q^(10)*t^9-2*q^(11)*t^9 -4*q^(12)*t^9+3*q^(13)*t^9+4*q^(14)*t^9+q^(15)*t^9-q^9*t^(10) -q^(11)*t^(10)-2*q^(12)*t^(10)-2*q^(13)*t^(10)+5*q^(14)*t^(10) +q^(15)*t^(10)-q^(10)*t^(11)-q^(12)*t^(11)-2*q^(13)*t^(11) +4*q^(15)*t^(11)-q^(11)*t^(12)-q^(13)*t^(12)-q^(14)*t^(12) +2*q^(15)*t^(12)+q^(16)*t^(12)-q^(12)*t^(13)-q^(14)*t^(13) +q^(15)*t^(13)+q^(16)*t^(13)-q^(13)*t^(14)+q^(16)*t^(14) -q^(14)*t^(15)+q^(16)*t^(15)-q^(15)*t^(16)+q^(16)*t^(16) -q^(16)*t^(17)+q^(17)*t^(17)+a^5*(q^(15)+2*q^(16)*t +q^(17)*t^2) + a^4*(q^(10)+q^(11) +q^(12)+q^(13)+q^(14) -q^(10)*t+q^(11)*t+3*q^(12)*t+3*q^(13)*t+3*q^(14)*t+3*q^(15)*t -2*q^(11)*t^2-q^(12)*t^2+3*q^(13)*t^2+4*q^(14)*t^2+4*q^(15)*t^2 +3*q^(16)*t^2-3*q^(12)*t^3-q^(13)*t^3+2*q^(14)*t^3+4*q^(15)*t^3 +3*q^(16)*t^3+q^(17)*t^3-4*q^(13)*t^4-q^(14)*t^4+3*q^(15)*t^4 +3*q^(16)*t^4+q^(17)*t^4-3*q^(14)*t^5-q^(15)*t^5+3*q^(16)*t^5 +q^(17)*t^5-2*q^(15)*t^6+q^(16)*t^6+q^(17)*t^6-q^(16)*t^7 + q^(17)*t^7) +a^3*(q^6+q^7+2*q^8+2*q^9 +2*q^(10)+q^(11) +q^(12)-q^6*t+q^8*t+4*q^9*t+6*q^(10)*t+8*q^(11)*t+5*q^(12)*t +4*q^(13)*t+q^(14)*t-q^7*t^2-2*q^8*t^2-3*q^9*t^2+q^(10)*t^2 +7*q^(11)*t^2+14*q^(12)*t^2+10*q^(13)*t^2+7*q^(14)*t^2 +2*q^(15)*t^2-q^8*t^3-2*q^9*t^3-6*q^(10)*t^3-4*q^(11)*t^3 +5*q^(12)*t^3+16*q^(13)*t^3+12*q^(14)*t^3+7*q^(15)*t^3 +q^(16)*t^3-q^9*t^4-2*q^(10)*t^4-8*q^(11)*t^4-8*q^(12)*t^4 +5*q^(13)*t^4+16*q^(14)*t^4+10*q^(15)*t^4+4*q^(16)*t^4-q^(10)*t^5 -2*q^(11)*t^5-8*q^(12)*t^5-8*q^(13)*t^5+5*q^(14)*t^5 +14*q^(15)*t^5+5*q^(16)*t^5+q^(17)*t^5-q^(11)*t^6-2*q^(12)*t^6 -8*q^(13)*t^6-4*q^(14)*t^6+7*q^(15)*t^6+8*q^(16)*t^6+q^(17)*t^6 -q^(12)*t^7-2*q^(13)*t^7-6*q^(14)*t^7+q^(15)*t^7+6*q^(16)*t^7 +2*q^(17)*t^7-q^(13)*t^8-2*q^(14)*t^8-3*q^(15)*t^8+4*q^(16)*t^8 +2*q^(17)*t^8-q^(14)*t^9-2*q^(15)*t^9+q^(16)*t^9+2*q^(17)*t^9 -q^(15)*t^(10)+q^(17)*t^(10)-q^(16)*t^(11)+q^(17)*t^(11)) +a^2*(q^3+q^4+2*q^5+2*q^6+2*q^7+q^8+q^9-q^3*t+3*q^6*t +6*q^7*t+8*q^8*t+7*q^9*t+6*q^(10)*t+2*q^(11)*t+q^(12)*t-q^4*t^2 -q^5*t^2-3*q^6*t^2-2*q^7*t^2+3*q^8*t^2+12*q^9*t^2+16*q^(10)*t^2 +15*q^(11)*t^2+7*q^(12)*t^2+3*q^(13)*t^2-q^5*t^3-q^6*t^3 -4*q^7*t^3-6*q^8*t^3-6*q^9*t^3+8*q^(10)*t^3+20*q^(11)*t^3 +23*q^(12)*t^3+11*q^(13)*t^3+4*q^(14)*t^3-q^6*t^4-q^7*t^4 -4*q^8*t^4-8*q^9*t^4-13*q^(10)*t^4+2*q^(11)*t^4+21*q^(12)*t^4 +26*q^(13)*t^4+11*q^(14)*t^4+3*q^(15)*t^4-q^7*t^5-q^8*t^5 -4*q^9*t^5-9*q^(10)*t^5-16*q^(11)*t^5-q^(12)*t^5+21*q^(13)*t^5 +23*q^(14)*t^5+7*q^(15)*t^5+q^(16)*t^5-q^8*t^6-q^9*t^6 -4*q^(10)*t^6-10*q^(11)*t^6-16*q^(12)*t^6+2*q^(13)*t^6 +20*q^(14)*t^6+15*q^(15)*t^6+2*q^(16)*t^6-q^9*t^7-q^(10)*t^7 -4*q^(11)*t^7-9*q^(12)*t^7-13*q^(13)*t^7+8*q^(14)*t^7 +16*q^(15)*t^7+6*q^(16)*t^7-q^(10)*t^8-q^(11)*t^8-4*q^(12)*t^8 -8*q^(13)*t^8-6*q^(14)*t^8+12*q^(15)*t^8+7*q^(16)*t^8+q^(17)*t^8 -q^(11)*t^9-q^(12)*t^9-4*q^(13)*t^9-6*q^(14)*t^9+3*q^(15)*t^9 +8*q^(16)*t^9+q^(17)*t^9-q^(12)*t^(10)-q^(13)*t^(10) -4*q^(14)*t^(10)-2*q^(15)*t^(10)+6*q^(16)*t^(10)+2*q^(17)*t^(10) -q^(13)*t^(11)-q^(14)*t^(11)-3*q^(15)*t^(11)+3*q^(16)*t^(11) +2*q^(17)*t^(11)-q^(14)*t^(12)-q^(15)*t^(12)+2*q^(17)*t^(12) -q^(15)*t^(13)+q^(17)*t^(13)-q^(16)*t^(14)+q^(17)*t^(14)) +a*(q+q^2+q^3+q^4+q^5-q*t+q^3*t+2*q^4*t+4*q^5*t+6*q^6*t +3*q^7*t+2*q^8*t+q^9*t-q^2*t^2-q^3*t^2-q^4*t^2-q^5*t^2+2*q^6*t^2 +10*q^7*t^2+10*q^8*t^2+9*q^9*t^2+4*q^(10)*t^2+q^(11)*t^2-q^3*t^3 -q^4*t^3-2*q^5*t^3-4*q^6*t^3-4*q^7*t^3+5*q^8*t^3+13*q^9*t^3 +18*q^(10)*t^3+9*q^(11)*t^3+3*q^(12)*t^3-q^4*t^4-q^5*t^4 -2*q^6*t^4-5*q^7*t^4-8*q^8*t^4-2*q^9*t^4+11*q^(10)*t^4 +22*q^(11)*t^4+14*q^(12)*t^4+4*q^(13)*t^4-q^5*t^5-q^6*t^5 -2*q^7*t^5-5*q^8*t^5-11*q^9*t^5-7*q^(10)*t^5+9*q^(11)*t^5 +23*q^(12)*t^5+14*q^(13)*t^5+3*q^(14)*t^5-q^6*t^6-q^7*t^6 -2*q^8*t^6-5*q^9*t^6-13*q^(10)*t^6-8*q^(11)*t^6+9*q^(12)*t^6 +22*q^(13)*t^6+9*q^(14)*t^6+q^(15)*t^6-q^7*t^7-q^8*t^7-2*q^9*t^7 -5*q^(10)*t^7-13*q^(11)*t^7-7*q^(12)*t^7+11*q^(13)*t^7 +18*q^(14)*t^7+4*q^(15)*t^7-q^8*t^8-q^9*t^8-2*q^(10)*t^8 -5*q^(11)*t^8-11*q^(12)*t^8-2*q^(13)*t^8+13*q^(14)*t^8 +9*q^(15)*t^8+q^(16)*t^8-q^9*t^9-q^(10)*t^9-2*q^(11)*t^9 -5*q^(12)*t^9-8*q^(13)*t^9+5*q^(14)*t^9+10*q^(15)*t^9 +2*q^(16)*t^9-q^(10)*t^(10)-q^(11)*t^(10)-2*q^(12)*t^(10) -5*q^(13)*t^(10)-4*q^(14)*t^(10)+10*q^(15)*t^(10)+3*q^(16)*t^(10) -q^(11)*t^(11)-q^(12)*t^(11)-2*q^(13)*t^(11)-4*q^(14)*t^(11) +2*q^(15)*t^(11)+6*q^(16)*t^(11)-q^(12)*t^(12)-q^(13)*t^(12) -2*q^(14)*t^(12)-q^(15)*t^(12)+4*q^(16)*t^(12)+q^(17)*t^(12) -q^(13)*t^(13)-q^(14)*t^(13)-q^(15)*t^(13)+2*q^(16)*t^(13) +q^(17)*t^(13)-q^(14)*t^(14)-q^(15)*t^(14)+q^(16)*t^(14) +q^(17)*t^(14) -q^(15)*t^(15)+q^(17)*t^(15)-q^(16)*t^(16)+q^(17)*t^(16))
