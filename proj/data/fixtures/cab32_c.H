1-q^2+q*t+q^2*t -q^3*t+q^2*t^2+q^3*t^3+a^3*(-((q^4)*t^(-2)) -((q^5)*t^(-1)))+ a^2*(q^3-q^4-q^5-((q^3)*t^(-2))-((q^3)*t^(-1)) -((2*q^4)*t^(-1))) +a*(q+q^2-2*q^3-q^4-((q^2)*t^(-1)) -((q^3)*t^(-1))+q^2*t+q^3*t-q^4*t+q^3*t^2)
