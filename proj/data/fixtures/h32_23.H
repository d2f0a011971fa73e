a^3*q^6+a^2*(q^3+q^4+q^5-q^3*t+q^4*t +q^5*t+q^6*t-2*q^4*t^2+q^5*t^2+q^6*t^2-q^5*t^3+q^6*t^3) +a*(q+q^2+q^3-q*t+2*q^3*t+2*q^4*t+q^5*t-q^2*t^2-2*q^3*t^2 +2*q^4*t^2+2*q^5*t^2-q^3*t^3 -2*q^4*t^3 +2*q^5*t^3+q^6*t^3-q^4*t^4+q^6*t^4-q^5*t^5+q^6*t^5)+ 1-t+q*t+q^2*t+q^3*t-q*t^2 +q^3*t^2+q^4*t^2-q^2*t^3-q^3*t^3+q^4*t^3+q^5*t^3 -q^3*t^4+q^5*t^4-q^4*t^5 +q^5*t^5-q^5*t^6+q^6*t^6
